//! Arithmetics induced by generators, and the calculus, statistics and
//! cosmology built on them.
//!
//! A generator is a bijection `f: X → ℝ`. It transports ordinary arithmetic
//! to `X`: `x ⊕ y = f⁻¹(f(x) + f(y))` and likewise for `⊖`, `⊙`, `⊘`.
//! Maps between two such arithmetics have derivatives, integrals,
//! exponentials and logarithms defined through their conjugates on ℝ.
//!
//! | module | contents |
//! |--------|----------|
//! | [`arithmetic`] | generators, induced operations, mixed operations |
//! | [`calculus`] | non-Newtonian derivative, integral, Exp and Ln |
//! | [`kappa`] | Kaniadakis κ-arithmetic and the two κ-exponentials |
//! | [`statmech`] | Kolmogorov–Nagumo means, entropies, maximum entropy |
//! | [`escort`] | normalization-preserving escort maps, spin bijection |
//! | [`cosmo`] | Friedman scale factors and the matched generator |
//! | [`cli`] | the `nncalc` command line |
//!
//! Runnable walkthroughs live in `examples/`:
//!
//! ```text
//! cargo run --example two_plus_two
//! cargo run --example nn_derivative
//! cargo run --example kappa_calculus
//! cargo run --example fig1_tails
//! cargo run --example renyi_kn_means
//! cargo run --example maxent
//! cargo run --example escort_maps
//! cargo run --example hidden_variables
//! cargo run --example friedman
//! ```

pub mod arithmetic;
pub mod calculus;
pub mod cli;
pub mod cosmo;
pub mod error;
pub mod escort;
pub mod kappa;
pub mod numeric;
pub mod selfcheck;
pub mod statmech;
pub mod table;

pub use arithmetic::{Arithmetic, Generator, GeneratorConfig, Interval, Op};
pub use calculus::{nn_derivative, nn_exp, nn_integral, nn_ln, NNFunction};
pub use error::{Error, Result};
