//! Exact computations for Peterson Schubert calculus in every finite Lie
//! type.
//!
//! The crate builds root systems from their Cartan matrices ([`rootsys`]),
//! works with Weyl group elements through reduced words ([`weyl`]),
//! evaluates the one-parameter projection of Billey-type localizations
//! `p_v(w)` ([`billey`]) and assembles the Monk and Giambelli evaluations on
//! the fixed points of the Peterson variety ([`peterson`]).
//!
//! All arithmetic is exact: heights are small integers, localization
//! coefficients are arbitrary-precision integers and structure constants
//! are arbitrary-precision rationals.
//!
//! ```
//! use peterson::prelude::*;
//!
//! let e6 = RootSystem::new("E6".parse().unwrap());
//! let full = SimpleSubset::full(e6.rank());
//! let w0 = longest_element_word(&e6, full);
//! assert_eq!(w0.len(), 36);
//!
//! let v = coxeter_word(full).unwrap();
//! assert_eq!(reduced_words(&e6, &v).unwrap().len(), 3);
//! let dp = billey_eval_dp(&e6, &v, &w0).unwrap();
//! let oracle = billey_eval_bruteforce(&e6, &v, &w0, None).unwrap();
//! assert_eq!(dp, oracle);
//! ```

pub mod billey;
pub mod cli;
pub mod error;
pub mod peterson;
pub mod report;
pub mod rootsys;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::billey::{
        billey_eval_bruteforce, billey_eval_dp, billey_eval_subsets, inversion_heights,
        sound_window, LocalizationValue,
    };
    pub use crate::peterson::{
        coxeter_word, giambelli_eval, giambelli_ratio, monk_eval, monk_structure_constants,
        EvaluationTable, FixedPoints,
    };
    pub use crate::rootsys::{LieType, Root, RootSystem};
    pub use crate::weyl::{
        act, inversion_root, is_reduced, longest_element_word, reduced_words, SimpleSubset, Word,
    };
}
