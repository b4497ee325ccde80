//! Finite 1- and 2-category kernel.
//!
//! Categories are explicit: an object count, an arrow list with endpoints, an
//! identity arrow per object, and a composition table defined exactly on the
//! composable pairs.  All axiom checks sweep every instance.

mod construct;
mod enumerate;
mod fincat;
mod functor;
mod twocat;

pub use construct::{arrow_category, product_category, strict_pullback, ArrowCat, Product, Pullback};
pub use enumerate::{enumerate_functors, enumerate_nat_trans};
pub use fincat::{Arrow, FinCat};
pub use functor::{
    compose_functors, functor_props, horizontal_compose, is_iso_of_categories, vertical_compose,
    Functor, FunctorProps, NatTrans,
};
pub use twocat::{
    locally_discrete, validate_modification, validate_two_cat, validate_two_functor,
    validate_two_nat_trans, CompTable, Modification, TwoCat, TwoFunctor, TwoNatTrans,
};
