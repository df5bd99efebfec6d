//! Exact Schubert calculus on simply-laced flag varieties `G/B`.
//!
//! The crate builds root systems of types A, D and E, works with Weyl group
//! elements through their inversion sets, multiplies Schubert classes by
//! divisors with the Pieri rule, and decides when a divisor monomial
//! `D_1^{n_1} ⋯ D_r^{n_r}` has a Schubert coefficient equal to one. The
//! maximal degree of such a multiplicity-free monomial is found by an exact
//! search over multipaths in the Dynkin diagram.
//!
//! Indices are 0-based inside the library. Text and JSON use 1-based
//! Bourbaki numbering.

pub mod chow;
pub mod cluster;
pub mod error;
pub mod halldist;
pub mod index_set;
pub mod io;
pub mod multipath;
pub mod rootsys;
pub mod verify;
pub mod weyl;

pub use chow::{
    coefficient, coefficient_with, count_labeled_sortings, expand_monomial, is_multiplicity_free,
    pieri_multiply, CoefficientMethod, SchubertVector, SortingCounter,
};
pub use cluster::{
    classify, classify_checked, is_excessively_clusterizable, is_simply_excessively_clusterizable,
    AConfiguration, Classification, Trace, Verdict,
};
pub use error::{Error, Result};
pub use halldist::{find_distribution, hall_feasible, Distribution};
pub use index_set::IndexSet;
pub use multipath::{
    closed_form_max_degree, max_multipath_total_length, max_single_divisor_power, multipath_witness,
    single_divisor_classify, Multipath, PathOriginatingSequence,
};
pub use rootsys::{CartanType, Kind, Root, RootSystem};
pub use weyl::{ReflectionKind, SortingProcess, WeylElement};

/// Environment variable bounding how many Weyl group elements a command
/// may enumerate.
pub const MAX_ELEMENTS_ENV: &str = "SCHUBERT_MF_MAX_ELEMENTS";

/// Default enumeration bound; large enough for every group up to `D_6`
/// and `E_6`.
pub const DEFAULT_MAX_ELEMENTS: usize = 100_000;

/// The enumeration bound from [`MAX_ELEMENTS_ENV`], or the default.
pub fn max_elements_from_env() -> Result<usize> {
    match std::env::var(MAX_ELEMENTS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{MAX_ELEMENTS_ENV} must be a number, got `{v}`"))),
        Err(_) => Ok(DEFAULT_MAX_ELEMENTS),
    }
}
