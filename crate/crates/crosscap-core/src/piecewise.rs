//! Exact piecewise-linear functions on a half-line `[start, oo)`.
//!
//! A function is stored as its breakpoints `(w, value)` with strictly
//! increasing `w`, affine interpolation between consecutive breakpoints,
//! and a final ray of slope `final_slope` beyond the last one. Collinear
//! breakpoints are normalized away on construction, so structural equality
//! is canonical function equality.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::fraction::Fraction;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PiecewiseLinear {
    breakpoints: Vec<(Fraction, Fraction)>,
    final_slope: Fraction,
}

/// Zero set of a piecewise-linear function, split into isolated roots and
/// maximal intervals on which the function vanishes identically.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Roots {
    pub isolated: Vec<Fraction>,
    pub intervals: Vec<ZeroInterval>,
}

/// A maximal closed interval of zeros; `end == None` marks a ray `[start, oo)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZeroInterval {
    pub start: Fraction,
    pub end: Option<Fraction>,
}

/// Infimum over the open ray `w > start`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Infimum {
    Finite { value: Fraction, attained: bool },
    NegInfinity,
}

impl PiecewiseLinear {
    /// Builds a function from raw breakpoints; normalizes away collinear ones.
    ///
    /// Panics if the breakpoint `w`-coordinates are not strictly increasing
    /// or the list is empty.
    pub fn new(breakpoints: Vec<(Fraction, Fraction)>, final_slope: Fraction) -> Self {
        assert!(!breakpoints.is_empty(), "piecewise function needs a domain start");
        for pair in breakpoints.windows(2) {
            assert!(pair[0].0 < pair[1].0, "breakpoints must strictly increase");
        }
        let mut kept: Vec<(Fraction, Fraction)> = Vec::with_capacity(breakpoints.len());
        for bp in breakpoints {
            while kept.len() >= 2 && collinear(&kept[kept.len() - 2], &kept[kept.len() - 1], &bp) {
                kept.pop();
            }
            kept.push(bp);
        }
        while kept.len() >= 2 {
            let last = &kept[kept.len() - 1];
            let prev = &kept[kept.len() - 2];
            if segment_slope(prev, last) == final_slope {
                kept.pop();
            } else {
                break;
            }
        }
        PiecewiseLinear { breakpoints: kept, final_slope }
    }

    /// The affine function `slope * w + intercept` on `[1, oo)`.
    pub fn affine(slope: Fraction, intercept: Fraction) -> Self {
        let start = Fraction::one();
        let value = &slope + &intercept;
        PiecewiseLinear { breakpoints: vec![(start, value)], final_slope: slope }
    }

    /// The zero function on `[1, oo)`.
    pub fn zero() -> Self {
        Self::affine(Fraction::zero(), Fraction::zero())
    }

    pub fn domain_start(&self) -> &Fraction {
        &self.breakpoints[0].0
    }

    pub fn breakpoints(&self) -> &[(Fraction, Fraction)] {
        &self.breakpoints
    }

    pub fn final_slope(&self) -> &Fraction {
        &self.final_slope
    }

    /// Exact value at `w`; errors when `w` is left of the domain.
    pub fn eval(&self, w: &Fraction) -> Result<Fraction> {
        if w < self.domain_start() {
            return Err(Error::Domain { detail: "evaluation left of domain start" });
        }
        let (last_w, last_v) = self.breakpoints.last().unwrap();
        if w >= last_w {
            return Ok(last_v + &(&self.final_slope * &(w - last_w)));
        }
        // w lies strictly inside some bounded segment.
        let idx = self
            .breakpoints
            .partition_point(|(bw, _)| bw <= w);
        let (w0, v0) = &self.breakpoints[idx - 1];
        let (w1, v1) = &self.breakpoints[idx];
        if w == w0 {
            return Ok(v0.clone());
        }
        Ok(v0 + &(&(&(v1 - v0) * &(w - w0)) / &(w1 - w0)))
    }

    /// Exact sum; inputs must share the same domain start.
    pub fn sum(fs: &[PiecewiseLinear]) -> PiecewiseLinear {
        let Some(first) = fs.first() else {
            return PiecewiseLinear::zero();
        };
        let start = first.domain_start().clone();
        for f in fs {
            assert!(f.domain_start() == &start, "summands must share the domain start");
        }
        let mut ws: Vec<Fraction> = fs
            .iter()
            .flat_map(|f| f.breakpoints.iter().map(|(w, _)| w.clone()))
            .collect();
        ws.sort();
        ws.dedup();
        let breakpoints = ws
            .into_iter()
            .map(|w| {
                let v = fs.iter().map(|f| f.eval(&w).unwrap()).sum();
                (w, v)
            })
            .collect();
        let final_slope = fs.iter().map(|f| f.final_slope.clone()).sum();
        PiecewiseLinear::new(breakpoints, final_slope)
    }

    /// The function plus a constant.
    pub fn shift(&self, c: &Fraction) -> PiecewiseLinear {
        PiecewiseLinear {
            breakpoints: self
                .breakpoints
                .iter()
                .map(|(w, v)| (w.clone(), v + c))
                .collect(),
            final_slope: self.final_slope.clone(),
        }
    }

    /// All zeros on the whole domain `[start, oo)`.
    pub fn roots(&self) -> Roots {
        let mut isolated: Vec<Fraction> = Vec::new();
        let mut intervals: Vec<ZeroInterval> = Vec::new();

        for pair in self.breakpoints.windows(2) {
            let (w0, v0) = &pair[0];
            let (w1, v1) = &pair[1];
            match (v0.is_zero(), v1.is_zero()) {
                (true, true) => intervals.push(ZeroInterval {
                    start: w0.clone(),
                    end: Some(w1.clone()),
                }),
                (true, false) => isolated.push(w0.clone()),
                (false, true) => isolated.push(w1.clone()),
                (false, false) => {
                    if v0.signum() != v1.signum() {
                        // v0 + (v1-v0) (r-w0)/(w1-w0) = 0
                        let r = w0 + &(&(&-v0 * &(w1 - w0)) / &(v1 - v0));
                        isolated.push(r);
                    }
                }
            }
        }

        let (wl, vl) = self.breakpoints.last().unwrap();
        if self.final_slope.is_zero() {
            if vl.is_zero() {
                intervals.push(ZeroInterval { start: wl.clone(), end: None });
            }
        } else if vl.is_zero() {
            isolated.push(wl.clone());
        } else {
            let r = wl - &(vl / &self.final_slope);
            if &r > wl {
                isolated.push(r);
            }
        }

        // Merge touching intervals, then drop isolated points they absorb.
        intervals.sort_by(|a, b| a.start.cmp(&b.start));
        let mut merged: Vec<ZeroInterval> = Vec::new();
        for iv in intervals {
            match merged.last_mut() {
                Some(last) if last.end.as_ref() == Some(&iv.start) => last.end = iv.end,
                _ => merged.push(iv),
            }
        }
        isolated.sort();
        isolated.dedup();
        isolated.retain(|r| {
            !merged.iter().any(|iv| {
                r >= &iv.start && iv.end.as_ref().map_or(true, |e| r <= e)
            })
        });

        Roots { isolated, intervals: merged }
    }

    /// Infimum over `w > start` (the left endpoint excluded).
    pub fn inf_over_open_ray(&self) -> Infimum {
        if self.final_slope.is_negative() {
            return Infimum::NegInfinity;
        }
        let start_value = self.breakpoints[0].1.clone();
        if self.breakpoints.len() == 1 {
            return Infimum::Finite {
                value: start_value,
                attained: self.final_slope.is_zero(),
            };
        }
        let attained_min = self.breakpoints[1..]
            .iter()
            .map(|(_, v)| v)
            .min()
            .unwrap()
            .clone();
        match attained_min.cmp(&start_value) {
            Ordering::Greater => Infimum::Finite { value: start_value, attained: false },
            _ => Infimum::Finite { value: attained_min, attained: true },
        }
    }

    /// Minimum over a closed interval `[lo, hi]`, or over `[lo, oo)` when
    /// `hi` is `None`; `None` result means unbounded below.
    pub fn min_over_interval(&self, lo: &Fraction, hi: Option<&Fraction>) -> Option<Fraction> {
        let mut best = self.eval(lo).unwrap();
        let mut consider = |v: Fraction| {
            if v < best {
                best = v;
            }
        };
        for (w, v) in &self.breakpoints {
            if w > lo && hi.map_or(true, |h| w < h) {
                consider(v.clone());
            }
        }
        match hi {
            Some(h) => consider(self.eval(h).unwrap()),
            None => {
                if self.final_slope.is_negative() {
                    return None;
                }
            }
        }
        Some(best)
    }
}

fn segment_slope(a: &(Fraction, Fraction), b: &(Fraction, Fraction)) -> Fraction {
    &(&b.1 - &a.1) / &(&b.0 - &a.0)
}

fn collinear(a: &(Fraction, Fraction), b: &(Fraction, Fraction), c: &(Fraction, Fraction)) -> bool {
    segment_slope(a, b) == segment_slope(b, c)
}
