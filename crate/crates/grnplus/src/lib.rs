pub mod diffcore;

pub use diffcore::tensor::Tensor;
