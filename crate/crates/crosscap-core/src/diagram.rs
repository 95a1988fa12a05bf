//! The 1-complex on which edgepaths live: vertices `<p/q>`, `o p/q` and
//! `<1/0>`, and the edges joining them.
//!
//! The interior vertex `<p/q>` sits at uv-coordinates `((q-1)/q, p/q)`; under
//! the substitution `w = 1/(1-u)` its w-coordinate is simply `q`. All cut and
//! gluing computations in this crate happen in the w-coordinate, where they
//! are piecewise linear.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::fraction::Fraction;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DiagramVertex {
    /// `<p/q>` at `((q-1)/q, p/q)`.
    Interior(Fraction),
    /// `o p/q` at `(1, p/q)`.
    Ring(Fraction),
    /// `<1/0>` at `(-1, 0)`.
    Infinity,
}

impl DiagramVertex {
    /// w-coordinate, when finite (`Ring` lives at `u = 1`, i.e. `w = oo`).
    pub fn w(&self) -> Option<Fraction> {
        match self {
            DiagramVertex::Interior(f) => Some(Fraction::from_int(f.denom().clone())),
            DiagramVertex::Ring(_) => None,
            DiagramVertex::Infinity => None,
        }
    }

    pub fn fraction(&self) -> Option<&Fraction> {
        match self {
            DiagramVertex::Interior(f) | DiagramVertex::Ring(f) => Some(f),
            DiagramVertex::Infinity => None,
        }
    }
}

impl fmt::Display for DiagramVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramVertex::Interior(x) => write!(f, "<{x}>"),
            DiagramVertex::Ring(x) => write!(f, "o({x})"),
            DiagramVertex::Infinity => write!(f, "<1/0>"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EdgeKind {
    NonHorizontal,
    Vertical,
    Horizontal,
    Infinity,
}

/// An edge of the diagram, traversed left to right.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiagramEdge {
    left: DiagramVertex,
    right: DiagramVertex,
    kind: EdgeKind,
}

impl DiagramEdge {
    /// `<p/q>` -- `<r/s>` with `|ps - qr| = 1` and `q < s`.
    pub fn non_horizontal(left: Fraction, right: Fraction) -> Result<Self> {
        let det = det_one(&left, &right);
        let ordered = left.denom() < right.denom();
        if !det || !ordered {
            return Err(Error::InconsistentSystem { detail: "not a diagram edge" });
        }
        Ok(DiagramEdge {
            left: DiagramVertex::Interior(left),
            right: DiagramVertex::Interior(right),
            kind: EdgeKind::NonHorizontal,
        })
    }

    /// The vertical edge `<z>` -- `<z+1>`.
    pub fn vertical(z: i64) -> Self {
        DiagramEdge {
            left: DiagramVertex::Interior(Fraction::from_int(z)),
            right: DiagramVertex::Interior(Fraction::from_int(z + 1)),
            kind: EdgeKind::Vertical,
        }
    }

    /// The horizontal edge `<p/q>` -- `o p/q`.
    pub fn horizontal(f: Fraction) -> Self {
        DiagramEdge {
            left: DiagramVertex::Interior(f.clone()),
            right: DiagramVertex::Ring(f),
            kind: EdgeKind::Horizontal,
        }
    }

    /// `<1/0>` -- `<z>` for an integer vertex.
    pub fn infinity(z: i64) -> Self {
        DiagramEdge {
            left: DiagramVertex::Infinity,
            right: DiagramVertex::Interior(Fraction::from_int(z)),
            kind: EdgeKind::Infinity,
        }
    }

    pub fn left(&self) -> &DiagramVertex {
        &self.left
    }

    pub fn right(&self) -> &DiagramVertex {
        &self.right
    }

    pub fn kind(&self) -> EdgeKind {
        self.kind
    }

    /// Whether the edge crosses into the region `u > 0` (everything except
    /// vertical and infinity edges does).
    pub fn counts_in_positive_u(&self) -> bool {
        !matches!(self.kind, EdgeKind::Vertical | EdgeKind::Infinity)
    }

    pub fn touches(&self, v: &DiagramVertex) -> bool {
        &self.left == v || &self.right == v
    }
}

impl fmt::Display for DiagramEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -- {}", self.left, self.right)
    }
}

fn det_one(a: &Fraction, b: &Fraction) -> bool {
    let det: BigInt = a.numer() * b.denom() - a.denom() * b.numer();
    det.abs() == BigInt::from(1)
}

/// A point on an edge: barycentric on a non-horizontal edge, or a cap point
/// at an explicit w-coordinate on a horizontal edge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgePoint {
    pub edge: DiagramEdge,
    pub position: PointPosition,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PointPosition {
    /// Coefficient `a` of the left vertex, `0 <= a <= 1`.
    Barycentric(Fraction),
    /// w-coordinate of a cap point; the v-coordinate stays the edge fraction.
    Cap(Fraction),
}

impl EdgePoint {
    pub fn barycentric(edge: DiagramEdge, a: Fraction) -> Result<Self> {
        if !matches!(edge.kind, EdgeKind::NonHorizontal | EdgeKind::Vertical) {
            return Err(Error::InconsistentSystem { detail: "barycentric point off an interior edge" });
        }
        if a.is_negative() || a > Fraction::one() {
            return Err(Error::InconsistentSystem { detail: "barycentric coefficient outside [0,1]" });
        }
        Ok(EdgePoint { edge, position: PointPosition::Barycentric(a) })
    }

    pub fn cap(edge: DiagramEdge, w: Fraction) -> Result<Self> {
        if edge.kind != EdgeKind::Horizontal {
            return Err(Error::InconsistentSystem { detail: "cap point off a horizontal edge" });
        }
        let q = edge.left.w().unwrap();
        if w <= q {
            return Err(Error::InconsistentSystem { detail: "cap point left of the tangle vertex" });
        }
        Ok(EdgePoint { edge, position: PointPosition::Cap(w) })
    }

    /// w-coordinate of the point: `a q + (1-a) s` on `<p/q>` -- `<r/s>`.
    pub fn w(&self) -> Fraction {
        match &self.position {
            PointPosition::Barycentric(a) => {
                let q = self.edge.left.w().unwrap();
                let s = self.edge.right.w().unwrap();
                &(a * &q) + &(&(&Fraction::one() - a) * &s)
            }
            PointPosition::Cap(w) => w.clone(),
        }
    }

    /// The product `v * w`, which is affine along the edge: `a p + (1-a) r`.
    pub fn v_times_w(&self) -> Fraction {
        match &self.position {
            PointPosition::Barycentric(a) => {
                let p = Fraction::from_int(self.edge.left.fraction().unwrap().numer().clone());
                let r = Fraction::from_int(self.edge.right.fraction().unwrap().numer().clone());
                &(a * &p) + &(&(&Fraction::one() - a) * &r)
            }
            PointPosition::Cap(w) => self.edge.left.fraction().unwrap() * w,
        }
    }

    /// The v-coordinate itself.
    pub fn v(&self) -> Fraction {
        match &self.position {
            PointPosition::Cap(_) => self.edge.left.fraction().unwrap().clone(),
            PointPosition::Barycentric(_) => &self.v_times_w() / &self.w(),
        }
    }
}

impl fmt::Display for EdgePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.position {
            PointPosition::Barycentric(a) => {
                let b = &Fraction::one() - a;
                write!(f, "({a}){}+({b}){}", self.edge.left, self.edge.right)
            }
            PointPosition::Cap(w) => {
                write!(f, "cap v={} at w={w}", self.edge.left.fraction().unwrap())
            }
        }
    }
}

/// Ordered list of denominators along a run of edges, used by cut logic.
pub fn interior_fraction(v: &DiagramVertex) -> Option<&Fraction> {
    match v {
        DiagramVertex::Interior(f) => Some(f),
        _ => None,
    }
}

pub type VertexList = Vec<DiagramVertex>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fraction::frac;

    #[test]
    fn edge_validation() {
        assert!(DiagramEdge::non_horizontal(frac(0, 1), frac(-1, 3)).is_ok());
        assert!(DiagramEdge::non_horizontal(frac(1, 2), frac(1, 3)).is_ok());
        assert!(DiagramEdge::non_horizontal(frac(1, 3), frac(1, 2)).is_err()); // wrong order
        assert!(DiagramEdge::non_horizontal(frac(0, 1), frac(2, 5)).is_err()); // |ps-qr| = 2
        assert!(DiagramEdge::non_horizontal(frac(1, 3), frac(1, 4)).is_ok());
    }

    #[test]
    fn barycentric_point_coordinates() {
        // (1/3)<0> + (2/3)<-1/3>: w = 1/3*1 + 2/3*3 = 7/3, v*w = -2/3
        let e = DiagramEdge::non_horizontal(frac(0, 1), frac(-1, 3)).unwrap();
        let pt = EdgePoint::barycentric(e, frac(1, 3)).unwrap();
        assert_eq!(pt.w(), frac(7, 3));
        assert_eq!(pt.v_times_w(), frac(-2, 3));
        assert_eq!(pt.v(), frac(-2, 7));
    }

    #[test]
    fn cap_point_coordinates() {
        let e = DiagramEdge::horizontal(frac(-1, 2));
        let pt = EdgePoint::cap(e, frac(3, 1)).unwrap();
        assert_eq!(pt.w(), frac(3, 1));
        assert_eq!(pt.v(), frac(-1, 2));
        assert_eq!(pt.v_times_w(), frac(-3, 2));
    }

    #[test]
    fn cap_must_lie_right_of_vertex() {
        let e = DiagramEdge::horizontal(frac(-1, 2));
        assert!(EdgePoint::cap(e, frac(2, 1)).is_err());
    }

    #[test]
    fn vertex_display() {
        use alloc::string::ToString;
        assert_eq!(DiagramVertex::Interior(frac(-1, 3)).to_string(), "<-1/3>");
        assert_eq!(DiagramVertex::Ring(frac(1, 4)).to_string(), "o(1/4)");
        assert_eq!(DiagramVertex::Infinity.to_string(), "<1/0>");
    }
}
