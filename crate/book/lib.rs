//! mdbook cannot run listings that depend on workspace crates, so each
//! chapter is pulled in here as a module doc and `cargo test --doc` runs them.

#[doc = include_str!("src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("src/complexes.md")]
pub mod complexes {}
#[doc = include_str!("src/homology.md")]
pub mod homology {}
#[doc = include_str!("src/betti.md")]
pub mod betti {}
#[doc = include_str!("src/connectivity.md")]
pub mod connectivity {}
#[doc = include_str!("src/banner.md")]
pub mod banner {}
#[doc = include_str!("src/minimal-cycles.md")]
pub mod minimal_cycles {}
#[doc = include_str!("src/verification.md")]
pub mod verification {}
#[doc = include_str!("src/formats.md")]
pub mod formats {}
#[doc = include_str!("src/cli.md")]
pub mod cli {}
