//! Numerical toolkit for analytic function families on the unit disk whose
//! defining quantity `zf'/g` is confined to a vertical strip.
//!
//! The building blocks are:
//!
//! - [`series`]: exact-order truncated power series over complex coefficients,
//!   the computational substrate for everything else.
//! - [`kernel`]: the conformal map of the disk onto a vertical strip, its
//!   closed-form Taylor coefficients, and the strip parameter records.
//! - [`families`]: certified members of the strip-starlike and strip
//!   close-to-convex classes built through subordination, plus numerical
//!   membership and coefficient-domination checks.
//! - [`bounds`]: closed-form coefficient bounds for those classes and their
//!   large-`beta` limit forms.
//! - [`cauchy_euler`]: the diagonal coefficient transfer induced by a
//!   non-homogeneous equidimensional differential equation.
//!
//! The crate is `no_std`-compatible (`alloc` required): disable the default
//! `std` feature and enable `libm` instead.
#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("vstrip-core needs either the `std` feature or the `libm` feature");

mod math;

pub mod bounds;
pub mod cauchy_euler;
pub mod families;
pub mod kernel;
pub mod series;
pub mod tol;

pub use num_complex::Complex64;
