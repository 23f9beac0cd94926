//! Slope (Θ,σ)-stability, Harder-Narasimhan filtrations, Hilbert-Mumford
//! weights and Kempf filtrations for finite-dimensional representations of
//! finite quivers over `F_p`, with exact rational arithmetic throughout.
//!
//! Everything is computed by exhaustive search over subrepresentation
//! lattices, so inputs must be small. The [`verify`] module checks, point by
//! point over whole representation spaces, that the Kempf filtration and
//! the Harder-Narasimhan filtration agree.
//!
//! ```
//! use std::sync::Arc;
//! use quiverstab_core::{hn_filtration, kempf_filtration, DimVector, Field, Guards, Quiver,
//!     Representation, StabilityWeights};
//!
//! let quiver = Arc::new(Quiver::path(2));
//! let rep = Representation::zero_maps(quiver, Field::prime(2)?, DimVector(vec![1, 1]))?;
//! let w = StabilityWeights::standard(2);
//! let hn = hn_filtration(&rep, &w, &Guards::default())?;
//! let kempf = kempf_filtration(&rep, &w, &Guards::default())?;
//! assert_eq!(&hn.filtration, kempf.filtration.filtration());
//! # Ok::<(), quiverstab_core::Error>(())
//! ```

pub mod envelope;
pub mod error;
pub mod kempf;
pub mod linalg;
pub mod quiver;
pub mod stability;
pub mod verify;

pub use envelope::{
    coarsen, concave_majorant, gamma_opt, mu_v_eval, vector_of_filtration, DirectionalValue, EnvelopeResult,
    KempfValue, WeightVectorData,
};
pub use error::{Error, Result};
pub use kempf::{
    character_exponents, hm_semistable, kempf_filtration, kempf_value, numerical_mu_filtration,
    numerical_mu_weights, one_ps_from_filtration, CharacterExponents, KempfResult, OnePsWeights,
};
pub use linalg::{Field, Matrix, Rational, Scalar, Subspace};
pub use quiver::{
    filtration_quotient_dims, quotient_representation, sigma_of, slope, theta_of, validate_subrep, DimVector,
    Filtration, Quiver, Representation, StabilityWeights, Subrepresentation, WeightedFiltration,
};
pub use stability::{
    enumerate_subreps, hn_filtration, is_semistable, is_stable, king_theta, max_destabilizing, transform_weights,
    EnumerationOrder, HnResult, HnType, SubrepLattice,
};
pub use verify::{exhaustive_scan, hn_type, verify_theorem, ScanReport, TheoremCheck};

/// Ceilings on exhaustive enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Maximum number of subspaces enumerated at a single vertex.
    pub subspaces: u128,
    /// Maximum number of representation points in a scan.
    pub reps: u128,
}

impl Default for Guards {
    fn default() -> Self {
        Guards { subspaces: 1_000_000, reps: 100_000 }
    }
}
