use super::Scalar;

/// Errors raised by the differentiable substrate.
#[derive(Debug, thiserror::Error)]
pub enum DiffError {
    #[error("shape mismatch in {op}: {lhs:?} vs {rhs:?}")]
    ShapeMismatch { op: String, lhs: Vec<usize>, rhs: Vec<usize> },
    #[error("data length {len} does not match shape {shape:?} (expected {expected})")]
    BadLength { shape: Vec<usize>, len: usize, expected: usize },
    #[error("non-finite value produced by {op}")]
    NonFinite { op: String },
    #[error("backward requires a scalar loss, got shape {shape:?}")]
    NotScalarLoss { shape: Vec<usize> },
    #[error("tensor {name} is detached from the gradient graph but was expected to carry gradient")]
    DetachedTensor { name: String },
    #[error("parameter {name} has no gradient; run backward before the optimizer step")]
    MissingGradient { name: String },
    #[error("invalid argument for {op}: {message}")]
    InvalidArgument { op: String, message: String },
}

/// Dense n-dimensional array, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor<T> {
    shape: Vec<usize>,
    data: Vec<T>,
}

impl<T: Scalar> Tensor<T> {
    pub fn new(shape: &[usize], data: Vec<T>) -> Result<Self, DiffError> {
        let expected: usize = shape.iter().product();
        if data.len() != expected {
            return Err(DiffError::BadLength { shape: shape.to_vec(), len: data.len(), expected });
        }
        Ok(Self { shape: shape.to_vec(), data })
    }

    pub fn zeros(shape: &[usize]) -> Self {
        let n: usize = shape.iter().product();
        Self { shape: shape.to_vec(), data: vec![T::zero(); n] }
    }

    pub fn full(shape: &[usize], v: T) -> Self {
        let n: usize = shape.iter().product();
        Self { shape: shape.to_vec(), data: vec![v; n] }
    }

    pub fn scalar(v: T) -> Self {
        Self { shape: vec![1], data: vec![v] }
    }

    pub fn from_fn(shape: &[usize], mut f: impl FnMut(usize) -> T) -> Self {
        let n: usize = shape.iter().product();
        Self { shape: shape.to_vec(), data: (0..n).map(|i| f(i)).collect() }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn numel(&self) -> usize {
        self.data.len()
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<T> {
        self.data
    }

    /// Value of a single-element tensor.
    pub fn item(&self) -> T {
        assert_eq!(self.numel(), 1, "item() requires a scalar tensor");
        self.data[0]
    }

    pub fn reshaped(mut self, shape: &[usize]) -> Result<Self, DiffError> {
        let expected: usize = shape.iter().product();
        if expected != self.data.len() {
            return Err(DiffError::BadLength { shape: shape.to_vec(), len: self.data.len(), expected });
        }
        self.shape = shape.to_vec();
        Ok(self)
    }

    pub fn assert_finite(&self, op: &str) -> Result<(), DiffError> {
        if self.data.iter().all(|v| v.is_finite()) {
            Ok(())
        } else {
            Err(DiffError::NonFinite { op: op.to_string() })
        }
    }

    pub fn add_assign(&mut self, other: &Tensor<T>) {
        assert_eq!(self.shape, other.shape, "add_assign shape mismatch");
        for (d, s) in self.data.iter_mut().zip(other.data.iter()) {
            *d = *d + *s;
        }
    }

    pub fn scale(&mut self, factor: T) {
        for d in self.data.iter_mut() {
            *d = *d * factor;
        }
    }

    /// Squared L2 norm accumulated in f64 for stability.
    pub fn sq_norm_f64(&self) -> f64 {
        self.data.iter().map(|v| { let x = v.as_f64(); x * x }).sum()
    }

    /// Largest absolute element-wise difference.
    pub fn linf_diff(&self, other: &Tensor<T>) -> Result<f64, DiffError> {
        if self.shape != other.shape {
            return Err(DiffError::ShapeMismatch {
                op: "linf_diff".into(),
                lhs: self.shape.clone(),
                rhs: other.shape.clone(),
            });
        }
        Ok(self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a.as_f64() - b.as_f64()).abs())
            .fold(0.0, f64::max))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_rejects_bad_length() {
        let err = Tensor::<f32>::new(&[2, 3], vec![0.0; 5]).unwrap_err();
        assert!(matches!(err, DiffError::BadLength { expected: 6, .. }));
    }

    #[test]
    fn finite_check_catches_nan() {
        let mut t = Tensor::<f32>::zeros(&[4]);
        t.data_mut()[2] = f32::NAN;
        assert!(t.assert_finite("test").is_err());
    }

    #[test]
    fn item_and_scalar() {
        assert_eq!(Tensor::scalar(2.5f64).item(), 2.5);
    }
}
