use crate::error::{Result, VqlsError};
use crate::gates::{Circuit, Gate};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AnsatzKind {
    /// One `RY(θ_k)` on each qubit `k`.
    ProductRy,
    /// An RY layer, then `layers` rounds of a CX chain `0→1→…→n−1`
    /// followed by another RY layer.
    LayeredRyCx { layers: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AnsatzSpec {
    kind: AnsatzKind,
    n: usize,
}

impl AnsatzSpec {
    pub fn new(kind: AnsatzKind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(VqlsError::InvalidArgument("ansatz needs at least one qubit".into()));
        }
        if let AnsatzKind::LayeredRyCx { layers: 0 } = kind {
            return Err(VqlsError::InvalidArgument("layered ansatz needs layers >= 1".into()));
        }
        Ok(AnsatzSpec { kind, n })
    }

    pub fn product_ry(n: usize) -> Result<Self> {
        Self::new(AnsatzKind::ProductRy, n)
    }

    pub fn kind(&self) -> AnsatzKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parameter_count(&self) -> usize {
        match self.kind {
            AnsatzKind::ProductRy => self.n,
            AnsatzKind::LayeredRyCx { layers } => self.n * (layers + 1),
        }
    }

    /// `V(θ)`.
    pub fn circuit<T: Real>(&self, p: &Params<T>) -> Result<Circuit<T>> {
        let expected = self.parameter_count();
        if p.len() != expected {
            return Err(VqlsError::ParamLength { expected, got: p.len() });
        }
        let mut c = Circuit::new(self.n)?;
        let mut theta = p.theta().chunks(self.n);
        let ry_layer = |c: &mut Circuit<T>, angles: &[T]| -> Result<()> {
            for (q, &a) in angles.iter().enumerate() {
                c.push(Gate::ry(q, a))?;
            }
            Ok(())
        };
        ry_layer(&mut c, theta.next().expect("n >= 1 parameters"))?;
        for layer in theta {
            for q in 0..self.n - 1 {
                c.push(Gate::cx(q, q + 1))?;
            }
            ry_layer(&mut c, layer)?;
        }
        Ok(c)
    }
}

/// Ansatz angles in radians.
#[derive(Debug, Clone, PartialEq)]
pub struct Params<T> {
    theta: Vec<T>,
}

impl<T: Real> Params<T> {
    pub fn new(theta: Vec<T>) -> Result<Self> {
        if let Some(k) = theta.iter().position(|t| !t.is_finite()) {
            return Err(VqlsError::InvalidArgument(format!("theta_{k} is not finite")));
        }
        Ok(Params { theta })
    }

    pub fn theta(&self) -> &[T] {
        &self.theta
    }

    pub fn len(&self) -> usize {
        self.theta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theta.is_empty()
    }
}
