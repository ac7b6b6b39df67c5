use std::ops::{Add, Mul, Sub};

/// Vector in the local cylindrical basis (ê_R⊥, ê_φ, ê_Z).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CylVec {
    pub r: f64,
    pub phi: f64,
    pub z: f64,
}

impl CylVec {
    pub const ZERO: Self = Self {
        r: 0.0,
        phi: 0.0,
        z: 0.0,
    };

    pub const fn new(r: f64, phi: f64, z: f64) -> Self {
        Self { r, phi, z }
    }

    pub fn dot(self, o: Self) -> f64 {
        self.r * o.r + self.phi * o.phi + self.z * o.z
    }

    /// Right-handed cross product; (ê_R⊥, ê_φ, ê_Z) is right-handed.
    pub fn cross(self, o: Self) -> Self {
        Self {
            r: self.phi * o.z - self.z * o.phi,
            phi: self.z * o.r - self.r * o.z,
            z: self.r * o.phi - self.phi * o.r,
        }
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    /// Cartesian components at azimuth `phi`.
    pub fn to_cartesian(self, phi: f64) -> [f64; 3] {
        let (s, c) = phi.sin_cos();
        [self.r * c - self.phi * s, self.r * s + self.phi * c, self.z]
    }

    pub fn is_finite(self) -> bool {
        self.r.is_finite() && self.phi.is_finite() && self.z.is_finite()
    }
}

impl Add for CylVec {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.r + o.r, self.phi + o.phi, self.z + o.z)
    }
}

impl Sub for CylVec {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.r - o.r, self.phi - o.phi, self.z - o.z)
    }
}

impl Mul<f64> for CylVec {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        Self::new(self.r * k, self.phi * k, self.z * k)
    }
}

/// A quantity split by its order in 1/R at fixed direction and retarded time.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct OrderSplit {
    /// Terms ∝ 1/R.
    pub leading: CylVec,
    /// Terms ∝ 1/R² (and explicit-time pieces).
    pub subleading: CylVec,
}

impl OrderSplit {
    pub fn total(&self) -> CylVec {
        self.leading + self.subleading
    }
}
