use serde::Serialize;
use std::fmt;
use std::sync::Arc;

/// A finite-dimensional space with a distinguished basis, recorded as a tensor product of
/// labelled factors. Basis vectors of a product are ordered row-major: the leftmost factor
/// varies slowest.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Space {
    factors: Vec<Arc<Vec<String>>>,
}

impl Space {
    /// A single-factor space with the given basis labels.
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Space {
        Space { factors: vec![Arc::new(labels.into_iter().map(Into::into).collect())] }
    }

    /// `e0, e1, …` labels.
    pub fn numbered(prefix: &str, dim: usize) -> Space {
        Space::new((0..dim).map(|i| format!("{prefix}{i}")))
    }

    /// The ground field, the empty tensor product.
    pub fn ground() -> Space {
        Space { factors: Vec::new() }
    }

    pub fn zero() -> Space {
        Space::new(Vec::<String>::new())
    }

    pub fn tensor(&self, other: &Space) -> Space {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Space { factors }
    }

    pub fn tensor_all<'a>(spaces: impl IntoIterator<Item = &'a Space>) -> Space {
        let mut factors = Vec::new();
        for s in spaces {
            factors.extend(s.factors.iter().cloned());
        }
        Space { factors }
    }

    /// `self ⊗ self ⊗ …` (`n` copies); `n = 0` gives the ground field.
    pub fn power(&self, n: usize) -> Space {
        Space::tensor_all(std::iter::repeat_n(self, n))
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.len()).product()
    }

    pub fn factor_shape(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.len()).collect()
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    /// The `i`-th factor as a space of its own.
    pub fn factor(&self, i: usize) -> Space {
        Space { factors: vec![self.factors[i].clone()] }
    }

    /// Factors `range` as a space (the ground field if empty).
    pub fn sub(&self, range: std::ops::Range<usize>) -> Space {
        Space { factors: self.factors[range].to_vec() }
    }

    /// Collapses all factors into one, keeping composite labels.
    pub fn flatten(&self) -> Space {
        if self.factors.len() == 1 {
            return self.clone();
        }
        Space::new(self.labels())
    }

    pub fn label(&self, index: usize) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        let shape = self.factor_shape();
        let digits = decode(index, &shape);
        digits
            .iter()
            .zip(&self.factors)
            .map(|(d, f)| f[*d].as_str())
            .collect::<Vec<_>>()
            .join("⊗")
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.dim()).map(|i| self.label(i)).collect()
    }
}

/// Row-major digits of `index` for the given shape.
pub fn decode(mut index: usize, shape: &[usize]) -> Vec<usize> {
    let mut out = vec![0; shape.len()];
    for k in (0..shape.len()).rev() {
        out[k] = index % shape[k];
        index /= shape[k];
    }
    out
}

pub fn encode(digits: &[usize], shape: &[usize]) -> usize {
    digits.iter().zip(shape).fold(0, |acc, (d, s)| acc * s + d)
}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Space{:?}", self.factor_shape())
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shape = self.factor_shape();
        if shape.is_empty() {
            write!(f, "k")
        } else {
            let parts: Vec<String> = shape.iter().map(|d| d.to_string()).collect();
            write!(f, "k^({})", parts.join("⊗"))
        }
    }
}

impl Serialize for Space {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Space", 2)?;
        st.serialize_field("dim", &self.dim())?;
        st.serialize_field("factor_shape", &self.factor_shape())?;
        st.end()
    }
}
