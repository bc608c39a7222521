use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

/// Element of the representation ring: one integer multiplicity per
/// irreducible, in the irreducible order of the table it refers to.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct VirtualRep {
    pub mult: Vec<i64>,
}

impl VirtualRep {
    pub fn new(mult: Vec<i64>) -> Self {
        VirtualRep { mult }
    }

    pub fn zero(irreducibles: usize) -> Self {
        VirtualRep {
            mult: vec![0; irreducibles],
        }
    }

    /// The class `[I]` of the `index`-th irreducible.
    pub fn irreducible(irreducibles: usize, index: usize) -> Self {
        let mut v = Self::zero(irreducibles);
        v.mult[index] = 1;
        v
    }

    pub fn len(&self) -> usize {
        self.mult.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.mult.iter().all(|&m| m == 0)
    }

    /// True when every multiplicity is non-negative, i.e. the class of an
    /// actual representation.
    pub fn is_genuine(&self) -> bool {
        self.mult.iter().all(|&m| m >= 0)
    }

    /// `Σ mult_I · dims[I]`.
    pub fn dim(&self, dims: &[i64]) -> i64 {
        assert_eq!(self.mult.len(), dims.len());
        self.mult.iter().zip(dims).map(|(m, d)| m * d).sum()
    }

    pub fn scale(&self, factor: i64) -> Self {
        VirtualRep {
            mult: self.mult.iter().map(|m| m * factor).collect(),
        }
    }

    /// Relabels irreducibles: entry `I` of the result is entry `perm[I]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        VirtualRep {
            mult: perm.iter().map(|&j| self.mult[j]).collect(),
        }
    }
}

impl AddAssign<&VirtualRep> for VirtualRep {
    fn add_assign(&mut self, rhs: &VirtualRep) {
        assert_eq!(self.mult.len(), rhs.mult.len());
        for (a, b) in self.mult.iter_mut().zip(&rhs.mult) {
            *a += b;
        }
    }
}

impl SubAssign<&VirtualRep> for VirtualRep {
    fn sub_assign(&mut self, rhs: &VirtualRep) {
        assert_eq!(self.mult.len(), rhs.mult.len());
        for (a, b) in self.mult.iter_mut().zip(&rhs.mult) {
            *a -= b;
        }
    }
}

impl Add for &VirtualRep {
    type Output = VirtualRep;
    fn add(self, rhs: &VirtualRep) -> VirtualRep {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &VirtualRep {
    type Output = VirtualRep;
    fn sub(self, rhs: &VirtualRep) -> VirtualRep {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for VirtualRep {
    type Output = VirtualRep;
    fn add(mut self, rhs: VirtualRep) -> VirtualRep {
        self += &rhs;
        self
    }
}

impl Sub for VirtualRep {
    type Output = VirtualRep;
    fn sub(mut self, rhs: VirtualRep) -> VirtualRep {
        self -= &rhs;
        self
    }
}

impl Neg for VirtualRep {
    type Output = VirtualRep;
    fn neg(self) -> VirtualRep {
        self.scale(-1)
    }
}

impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, m) in self.mult.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "]")
    }
}
