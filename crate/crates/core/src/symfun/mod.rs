//! Symmetric functions in the elementary, complete and power-sum bases,
//! characteristic classes and multiplicative sequences.

mod basis;
mod classes;
mod roots;

pub use basis::{basis_degree, basis_images, convert_element, Basis, SymPoly};
pub use classes::{
    multiplicative_sequence, pontryagin_from_chern, pontryagin_from_element,
    symplectic_power_sum_check, zeta_image, zeta_specialize, zeta_specialize_element,
    CharacteristicNumbers, ChernPolynomial, ClassKind, Presentation,
};
pub use roots::{expand_element_in_roots, expand_in_roots, root_polynomials};
