//! Pretzel knot model: validation, knot classes and the closed-form
//! crosscap number, together with the reference surfaces F_A / F_B.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fraction::Fraction;

/// Which parity condition the tuple satisfies.
///
/// `A`: exactly one entry even. `B`: all entries odd and N odd.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KnotClass {
    A,
    B,
}

/// A validated pretzel knot `P(p_1, ..., p_N)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PretzelKnot {
    params: Vec<i64>,
    class: KnotClass,
}

/// First Betti number of F_B, its -chi/#s, and orientability of F_A.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReferenceSurfaceStats {
    pub betti_fb: u32,
    pub chi_ratio_fb: Fraction,
    pub fa_orientable: bool,
}

/// Validates a tuple and classifies it; rejects links.
pub fn parse_pretzel(params: &[i64]) -> Result<PretzelKnot> {
    if params.is_empty() {
        return Err(Error::EmptyTuple);
    }
    for &p in params {
        if p.abs() < 2 {
            return Err(Error::TangleParameter { p });
        }
    }
    let evens = params.iter().filter(|p| *p % 2 == 0).count();
    // a single even tangle closes to a 2-component torus link
    let class = if evens == 1 && params.len() >= 2 {
        KnotClass::A
    } else if evens == 0 && params.len() % 2 == 1 {
        KnotClass::B
    } else {
        return Err(Error::NotAKnot);
    };
    Ok(PretzelKnot { params: params.to_vec(), class })
}

impl PretzelKnot {
    pub fn params(&self) -> &[i64] {
        &self.params
    }

    pub fn tangle_count(&self) -> usize {
        self.params.len()
    }

    pub fn class(&self) -> KnotClass {
        self.class
    }

    /// The crosscap number per the main theorem, with the small-N cases:
    /// N = 2 gives a (2,n)-cable (crosscap 1) and N = 1 the unknot.
    pub fn crosscap_number(&self) -> u32 {
        let n = self.params.len() as u32;
        match (n, self.class) {
            (1, _) => 0,
            (2, _) => 1,
            (_, KnotClass::A) => n - 1,
            (_, KnotClass::B) => n,
        }
    }

    /// Statistics of the reference surfaces F_A / F_B; requires N >= 3.
    pub fn reference_stats(&self) -> Result<ReferenceSurfaceStats> {
        let n = self.params.len();
        if n < 3 {
            return Err(Error::TooFewTangles { n });
        }
        let n = n as u32;
        let (chi_ratio, betti, orientable) = match self.class {
            KnotClass::A => (n - 2, n - 1, false),
            KnotClass::B => (n - 1, n, true),
        };
        Ok(ReferenceSurfaceStats {
            betti_fb: betti,
            chi_ratio_fb: Fraction::from_int(chi_ratio as i64),
            fa_orientable: orientable,
        })
    }
}
