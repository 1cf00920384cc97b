//! Exact dynamics of two-move riders on convex rational boards, the
//! hyperplane arrangements of their non-attacking configurations, and
//! counting of placements on square boards.

#![no_std]

extern crate alloc;

pub mod arrangement;
pub mod closed_form;
pub mod counting;
pub mod denominator;
pub mod dynamics;
pub mod geometry;
pub mod quasi;
pub mod rational;

pub use arrangement::*;
pub use closed_form::*;
pub use counting::*;
pub use denominator::*;
pub use dynamics::*;
pub use geometry::*;
pub use quasi::*;
pub use rational::{lcm, reduce, Rational, RationalError};
