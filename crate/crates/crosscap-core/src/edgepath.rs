//! Basic and extended edgepaths for `1/p` tangles, the cut operation, and
//! the piecewise-linear functions attached to them.
//!
//! For a tangle `1/p` with `|p| >= 2` the two basic edgepaths are
//!
//! * variant `a`: `<0> -- <1/p>`, and
//! * variant `b`: `<s> -- <s/2> -- ... -- <s/|p|>` with `s = sign(p)`,
//!
//! extended by the horizontal edge `<1/p> -- o(1/p)`. Cutting an extended
//! path at the line `u = 1 - 1/w` produces the tail used by type I systems.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::{DiagramEdge, DiagramVertex, EdgeKind, EdgePoint, PointPosition};
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::piecewise::PiecewiseLinear;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Variant {
    A,
    B,
}

/// One of the two basic edgepaths of a tangle, by parameter and variant.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BasicEdgepath {
    tangle_p: i64,
    variant: Variant,
}

/// A concrete edgepath: either a (possibly cut) run of edges ending at the
/// tangle vertex, or a constant cap point on a horizontal edge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Edgepath {
    Path {
        /// Leading partial edge when the path starts mid-edge.
        partial: Option<EdgePoint>,
        /// Vertex at which the complete-edge run starts (the right vertex of
        /// the partial edge, when one is present).
        start: DiagramVertex,
        /// Complete edges, traversed left to right; may be empty.
        edges: Vec<DiagramEdge>,
    },
    Constant(EdgePoint),
}

impl BasicEdgepath {
    pub fn new(p: i64, variant: Variant) -> Result<Self> {
        if p.abs() < 2 {
            return Err(Error::TangleParameter { p });
        }
        Ok(BasicEdgepath { tangle_p: p, variant })
    }

    pub fn tangle_p(&self) -> i64 {
        self.tangle_p
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn sign(&self) -> i64 {
        self.tangle_p.signum()
    }

    pub fn abs_p(&self) -> i64 {
        self.tangle_p.abs()
    }

    /// The fraction `1/p` of the tangle vertex, sign on the numerator.
    pub fn tangle_fraction(&self) -> Fraction {
        Fraction::new(self.sign(), self.abs_p())
    }

    /// Interior vertices of the basic path, left to right.
    fn vertices(&self) -> Vec<Fraction> {
        match self.variant {
            Variant::A => vec![Fraction::zero(), self.tangle_fraction()],
            Variant::B => (1..=self.abs_p())
                .map(|k| Fraction::new(self.sign(), k))
                .collect(),
        }
    }

    /// The basic edgepath as a concrete path.
    pub fn path(&self) -> Edgepath {
        let vs = self.vertices();
        let edges = vs
            .windows(2)
            .map(|pair| DiagramEdge::non_horizontal(pair[0].clone(), pair[1].clone()).unwrap())
            .collect();
        Edgepath::Path {
            partial: None,
            start: DiagramVertex::Interior(vs[0].clone()),
            edges,
        }
    }

    /// The extended basic edgepath (horizontal edge to the ring appended).
    pub fn extended(&self) -> Edgepath {
        extend(&self.path()).unwrap()
    }

    /// The function `x_lambda(w)`: formal `-chi/#s` contribution of this
    /// tangle after cutting the extended path at `w`.
    ///
    /// Variant `a` is `1 - (w-1)/(|p|-1)` up to `w = |p|`, variant `b` is
    /// `|p| - w`; both continue as `1 - w/|p|` beyond.
    pub fn x_function(&self) -> PiecewiseLinear {
        let p = self.abs_p();
        let start_value = match self.variant {
            Variant::A => Fraction::one(),
            Variant::B => Fraction::from_int(p - 1),
        };
        PiecewiseLinear::new(
            vec![
                (Fraction::one(), start_value),
                (Fraction::from_int(p), Fraction::zero()),
            ],
            Fraction::new(-1, p),
        )
    }

    /// The gluing contribution `v(w) * w` of the extended path cut at `w`.
    ///
    /// Along the path this is affine because every vertex `<s/k>` shares the
    /// numerator `s`; beyond the tangle vertex the cap contributes `s w/|p|`.
    pub fn glue_function(&self) -> PiecewiseLinear {
        let p = self.abs_p();
        let s = Fraction::from_int(self.sign());
        let start_value = match self.variant {
            Variant::A => Fraction::zero(),
            Variant::B => s.clone(),
        };
        PiecewiseLinear::new(
            vec![
                (Fraction::one(), start_value),
                (Fraction::from_int(p), s),
            ],
            Fraction::new(self.sign(), p),
        )
    }

    /// Cuts the extended path at `w >= 1`, returning the part in `u >= u0`.
    pub fn cut(&self, w: &Fraction) -> Result<Edgepath> {
        if w < &Fraction::one() {
            return Err(Error::Domain { detail: "cut left of w = 1" });
        }
        cut_interior_run(&self.vertices(), Some(self.tangle_fraction()), w)
    }
}

/// Cuts a run of interior vertices (denominators strictly increasing) at `w`,
/// falling through to the cap on the trailing horizontal edge when `w` lies
/// past the last vertex.
fn cut_interior_run(
    vs: &[Fraction],
    horizontal: Option<Fraction>,
    w: &Fraction,
) -> Result<Edgepath> {
    let last_w = Fraction::from_int(vs.last().unwrap().denom().clone());
    if w > &last_w {
        let Some(f) = horizontal else {
            return Err(Error::Domain { detail: "cut past the end of an unextended path" });
        };
        let edge = DiagramEdge::horizontal(f);
        return Ok(Edgepath::Constant(EdgePoint::cap(edge, w.clone())?));
    }
    // The cut lands on exactly one vertex or inside exactly one edge; at
    // `w = |p|` the result is the degenerate vertex-start path.
    for (i, v) in vs.iter().enumerate() {
        let vw = Fraction::from_int(v.denom().clone());
        if w == &vw {
            let edges = vs[i..]
                .windows(2)
                .map(|pair| DiagramEdge::non_horizontal(pair[0].clone(), pair[1].clone()).unwrap())
                .collect();
            return Ok(Edgepath::Path {
                partial: None,
                start: DiagramVertex::Interior(v.clone()),
                edges,
            });
        }
    }
    let idx = vs
        .windows(2)
        .position(|pair| {
            let q = Fraction::from_int(pair[0].denom().clone());
            let s = Fraction::from_int(pair[1].denom().clone());
            &q < w && w < &s
        })
        .expect("cut coordinate inside the path range");
    let left = &vs[idx];
    let right = &vs[idx + 1];
    let q = Fraction::from_int(left.denom().clone());
    let s = Fraction::from_int(right.denom().clone());
    let a = &(w - &s) / &(&q - &s);
    let partial_edge = DiagramEdge::non_horizontal(left.clone(), right.clone()).unwrap();
    let partial = EdgePoint::barycentric(partial_edge, a)?;
    let edges = vs[idx + 1..]
        .windows(2)
        .map(|pair| DiagramEdge::non_horizontal(pair[0].clone(), pair[1].clone()).unwrap())
        .collect();
    Ok(Edgepath::Path {
        partial: Some(partial),
        start: DiagramVertex::Interior(right.clone()),
        edges,
    })
}

/// The two basic edgepaths `(lambda_a, lambda_b)` for a tangle `1/p`.
pub fn basic_edgepaths(p: i64) -> Result<(Edgepath, Edgepath)> {
    let a = BasicEdgepath::new(p, Variant::A)?;
    let b = BasicEdgepath::new(p, Variant::B)?;
    Ok((a.path(), b.path()))
}

/// Appends the horizontal edge `<1/p> -- o(1/p)` to a basic edgepath.
pub fn extend(path: &Edgepath) -> Result<Edgepath> {
    let Edgepath::Path { partial, start, edges } = path else {
        return Err(Error::AlreadyExtended);
    };
    if edges.iter().any(|e| e.kind() == EdgeKind::Horizontal) {
        return Err(Error::AlreadyExtended);
    }
    let last_vertex = match edges.last() {
        Some(e) => e.right().clone(),
        None => start.clone(),
    };
    let DiagramVertex::Interior(f) = last_vertex else {
        return Err(Error::InconsistentSystem { detail: "path does not end at a tangle vertex" });
    };
    let mut edges = edges.clone();
    edges.push(DiagramEdge::horizontal(f));
    Ok(Edgepath::Path {
        partial: partial.clone(),
        start: start.clone(),
        edges,
    })
}

impl Edgepath {
    pub fn is_constant(&self) -> bool {
        matches!(self, Edgepath::Constant(_))
    }

    pub fn partial(&self) -> Option<&EdgePoint> {
        match self {
            Edgepath::Path { partial, .. } => partial.as_ref(),
            Edgepath::Constant(_) => None,
        }
    }

    pub fn edges(&self) -> &[DiagramEdge] {
        match self {
            Edgepath::Path { edges, .. } => edges,
            Edgepath::Constant(_) => &[],
        }
    }

    /// The left endpoint of the path as `(w, v * w)`.
    pub fn start_point(&self) -> (Fraction, Fraction) {
        match self {
            Edgepath::Constant(pt) => (pt.w(), pt.v_times_w()),
            Edgepath::Path { partial: Some(pt), .. } => (pt.w(), pt.v_times_w()),
            Edgepath::Path { partial: None, start, .. } => match start {
                DiagramVertex::Interior(f) => (
                    Fraction::from_int(f.denom().clone()),
                    Fraction::from_int(f.numer().clone()),
                ),
                // <1/0> start of a type III path; w is formal there.
                _ => (Fraction::zero(), Fraction::zero()),
            },
        }
    }

    /// Edgepath length: complete edges count 1, a leading partial edge on
    /// `<p/q>` -- `<r/s>` cut at `w` counts `(s-w)/(s-q)` (which equals its
    /// left barycentric coefficient), constant caps count 0.
    pub fn length(&self) -> Fraction {
        match self {
            Edgepath::Constant(_) => Fraction::zero(),
            Edgepath::Path { partial, edges, .. } => {
                let mut len = Fraction::from_int(edges.len() as i64);
                if let Some(pt) = partial {
                    if let PointPosition::Barycentric(a) = &pt.position {
                        len += a;
                    }
                }
                len
            }
        }
    }

    /// Length restricted to the region `u > 0`: vertical and infinity edges
    /// are excluded.
    pub fn length_positive_u(&self) -> Fraction {
        match self {
            Edgepath::Constant(_) => Fraction::zero(),
            Edgepath::Path { partial, edges, .. } => {
                let mut len = Fraction::from_int(
                    edges.iter().filter(|e| e.counts_in_positive_u()).count() as i64,
                );
                if let Some(pt) = partial {
                    if pt.edge.kind() == EdgeKind::NonHorizontal {
                        if let PointPosition::Barycentric(a) = &pt.position {
                            len += a;
                        }
                    }
                }
                len
            }
        }
    }

    /// Checks the structural path invariants: consecutive edges share a
    /// vertex, the partial edge ends where the run starts, no repeats.
    pub fn validate(&self) -> Result<()> {
        let Edgepath::Path { partial, start, edges } = self else {
            return Ok(());
        };
        if let Some(pt) = partial {
            if pt.edge.right() != start {
                return Err(Error::InconsistentSystem {
                    detail: "partial edge does not meet the path start",
                });
            }
        }
        let mut at = start.clone();
        for edge in edges {
            if !edge.touches(&at) {
                return Err(Error::InconsistentSystem {
                    detail: "consecutive edges do not share a vertex",
                });
            }
            at = if edge.left() == &at {
                edge.right().clone()
            } else {
                edge.left().clone()
            };
        }
        for (i, e) in edges.iter().enumerate() {
            if edges[i + 1..].contains(e) {
                return Err(Error::InconsistentSystem { detail: "repeated edge" });
            }
        }
        Ok(())
    }
}

impl fmt::Display for Edgepath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Edgepath::Constant(pt) => write!(f, "{pt}"),
            Edgepath::Path { partial, start, edges } => {
                let mut at = start.clone();
                match partial {
                    Some(pt) => write!(f, "{pt} -- {start}")?,
                    None => write!(f, "{start}")?,
                }
                for edge in edges {
                    let next = if edge.left() == &at {
                        edge.right().clone()
                    } else {
                        edge.left().clone()
                    };
                    write!(f, " -- {next}")?;
                    at = next;
                }
                Ok(())
            }
        }
    }
}

/// The function `x_lambda(w)` of a basic edgepath.
pub fn x_of(basic: &BasicEdgepath) -> PiecewiseLinear {
    basic.x_function()
}

/// `X_Lambda(w) = [(N-2) w - N] + sum of x_lambda_i(w)` for a basic system.
pub fn big_x(system: &[BasicEdgepath]) -> PiecewiseLinear {
    let n = system.len() as i64;
    assert!(n >= 3, "X_Lambda needs at least 3 tangles");
    let mut parts: Vec<PiecewiseLinear> = Vec::with_capacity(system.len() + 1);
    parts.push(PiecewiseLinear::affine(
        Fraction::from_int(n - 2),
        Fraction::from_int(-n),
    ));
    parts.extend(system.iter().map(|b| b.x_function()));
    PiecewiseLinear::sum(&parts)
}

/// The gluing sum `S(w) = w * sum of v_i(w)`; type I systems live at its
/// zeros with `w > 1`.
pub fn gluing_sum(system: &[BasicEdgepath]) -> PiecewiseLinear {
    assert!(!system.is_empty());
    let parts: Vec<PiecewiseLinear> = system.iter().map(|b| b.glue_function()).collect();
    PiecewiseLinear::sum(&parts)
}

/// Cuts an extended edgepath at `w > 1`, keeping the part in `u >= u0`.
///
/// At `w = |p|` exactly the result is the degenerate vertex-start path;
/// beyond the tangle vertex the cut is a constant cap on the horizontal edge.
pub fn cut_at(path: &Edgepath, w: &Fraction) -> Result<Edgepath> {
    if w <= &Fraction::one() {
        return Err(Error::Domain { detail: "cut requires w > 1" });
    }
    let Edgepath::Path { partial: None, start, edges } = path else {
        return Err(Error::InconsistentSystem { detail: "cut of a partial or constant path" });
    };
    let DiagramVertex::Interior(f) = start else {
        return Err(Error::InconsistentSystem { detail: "cut of a path not starting in the interior" });
    };
    let mut vs = alloc::vec![f.clone()];
    let mut horizontal = None;
    for edge in edges {
        match edge.kind() {
            EdgeKind::NonHorizontal | EdgeKind::Vertical => {
                let DiagramVertex::Interior(g) = edge.right() else {
                    return Err(Error::InconsistentSystem { detail: "malformed edge run" });
                };
                vs.push(g.clone());
            }
            EdgeKind::Horizontal => {
                horizontal = Some(edge.left().fraction().unwrap().clone());
            }
            EdgeKind::Infinity => {
                return Err(Error::InconsistentSystem { detail: "cut of an infinity-prefixed path" });
            }
        }
    }
    cut_interior_run(&vs, horizontal, w)
}
