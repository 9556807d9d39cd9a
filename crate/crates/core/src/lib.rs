//! Exact symbolic computation of Dirac index polynomials for classical real groups.

pub mod asymptotics;
pub mod config;
pub mod dirac;
pub mod emit;
pub mod error;
pub mod fixtures;
pub mod kvirt;
pub mod lie;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod series;
pub mod springer;
pub mod su_n1;
pub mod suites;
pub mod weyl_action;

pub use config::Config;
pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/roots.md")]
    mod roots {}
    #[doc = include_str!("../../../book/src/index-polynomials.md")]
    mod index_polynomials {}
    #[doc = include_str!("../../../book/src/translation.md")]
    mod translation {}
    #[doc = include_str!("../../../book/src/su-n1.md")]
    mod su_n1 {}
    #[doc = include_str!("../../../book/src/springer.md")]
    mod springer {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
