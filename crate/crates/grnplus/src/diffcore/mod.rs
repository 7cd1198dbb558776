//! Differentiable-operation substrate: tensors, forward primitives,
//! reverse-mode gradients, the Adam update and the finite-difference oracle.

pub mod scalar;
pub mod tensor;

pub use scalar::Scalar;
pub use tensor::Tensor;
