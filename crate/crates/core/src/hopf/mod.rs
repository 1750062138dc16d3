//! The commutative algebra `H` of coordinate functions `a_η` and its
//! coproducts.

mod algebra;
mod coproduct;

pub use algebra::{
    counit, h_mul, kappa, theta, tilde_theta, CoordMonomial, HElement, TensorElement,
};
pub use coproduct::{
    big_theta, big_theta_coproduct, coproduct, coproduct_monomial, deshuffle, deshuffle_by_duality,
    full_coproduct, iterated_left, iterated_right, reduced_coproduct, tilde_coproduct,
    TripleTensor,
};
