//! Enumeration of candidate edgepath systems of types I, II and III, and the
//! statistics (`-chi/#s`, sheet bound, spanning/orientability flags) attached
//! to each.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::diagram::{DiagramEdge, DiagramVertex, EdgeKind, PointPosition};
use crate::edgepath::{big_x, gluing_sum, BasicEdgepath, Edgepath, Variant};
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::knot::{KnotClass, PretzelKnot};
use crate::piecewise::PiecewiseLinear;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SystemType {
    I,
    II,
    III,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Orientability {
    Orientable,
    Nonorientable,
    Unknown,
}

/// A concrete candidate edgepath system, one path per tangle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgepathSystem {
    paths: Vec<Edgepath>,
    type_tag: SystemType,
    /// Common endpoint w-coordinate (type I only).
    w0: Option<Fraction>,
    /// Number of vertical edges V (type II only, else 0).
    vertical_count: u32,
    source_basic: Vec<BasicEdgepath>,
}

/// A one-parameter family of type I systems over a w-interval on which the
/// gluing sum vanishes identically.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CandidateFamily {
    base: EdgepathSystem,
    w_start: Fraction,
    /// `None` means unbounded to the right.
    w_end: Option<Fraction>,
    left_closed: bool,
    right_closed: bool,
    /// `-chi/#s` as a function of w (valid on the interval).
    ratio_fn: PiecewiseLinear,
    source_basic: Vec<BasicEdgepath>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CandidateStats {
    pub chi_ratio: Fraction,
    /// Lower bound on the number of sheets: lcm of the reduced denominators
    /// of partial-edge coefficients on nonhorizontal edges.
    pub sheets_lb: BigInt,
    pub has_caps: bool,
    pub spanning_candidate: bool,
    pub orientability: Orientability,
}

/// Type I solutions of one knot: isolated systems plus families.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TypeISolutions {
    pub systems: Vec<EdgepathSystem>,
    pub families: Vec<CandidateFamily>,
}

impl EdgepathSystem {
    pub fn paths(&self) -> &[Edgepath] {
        &self.paths
    }

    pub fn type_tag(&self) -> SystemType {
        self.type_tag
    }

    pub fn w0(&self) -> Option<&Fraction> {
        self.w0.as_ref()
    }

    pub fn vertical_count(&self) -> u32 {
        self.vertical_count
    }

    pub fn source_basic(&self) -> &[BasicEdgepath] {
        &self.source_basic
    }

    pub fn tangle_params(&self) -> Vec<i64> {
        self.source_basic.iter().map(|b| b.tangle_p()).collect()
    }

    /// `true` for the distinguished all-variant-a type II system with no
    /// vertical edges (the system of the reference surface).
    pub fn is_gamma_a(&self) -> bool {
        self.type_tag == SystemType::II
            && self.vertical_count == 0
            && self.source_basic.iter().all(|b| b.variant() == Variant::A)
    }

    /// Structural gluing-consistency checks for the system's type.
    pub fn validate(&self) -> Result<()> {
        if self.paths.len() != self.source_basic.len() || self.paths.len() < 3 {
            return Err(Error::InconsistentSystem { detail: "wrong path count" });
        }
        for path in &self.paths {
            path.validate()?;
        }
        match self.type_tag {
            SystemType::I => {
                let w0 = self.w0.as_ref().ok_or(Error::InconsistentSystem {
                    detail: "type I system without w0",
                })?;
                let mut v_sum = Fraction::zero();
                for path in &self.paths {
                    if path
                        .edges()
                        .iter()
                        .any(|e| matches!(e.kind(), EdgeKind::Vertical | EdgeKind::Infinity))
                    {
                        return Err(Error::InconsistentSystem {
                            detail: "vertical or infinity edge in a type I path",
                        });
                    }
                    let (w, vw) = path.start_point();
                    if &w != w0 {
                        return Err(Error::InconsistentSystem {
                            detail: "type I endpoints at different w",
                        });
                    }
                    v_sum += &vw;
                }
                if !v_sum.is_zero() {
                    return Err(Error::InconsistentSystem {
                        detail: "type I endpoint v-coordinates do not sum to 0",
                    });
                }
            }
            SystemType::II => {
                let mut z_sum = Fraction::zero();
                for path in &self.paths {
                    let Edgepath::Path { partial: None, start, .. } = path else {
                        return Err(Error::InconsistentSystem {
                            detail: "type II path with a partial or cap",
                        });
                    };
                    let DiagramVertex::Interior(f) = start else {
                        return Err(Error::InconsistentSystem {
                            detail: "type II path must start at an interior vertex",
                        });
                    };
                    if !f.is_integer() {
                        return Err(Error::InconsistentSystem {
                            detail: "type II path must start at an integer vertex",
                        });
                    }
                    z_sum += f;
                }
                if !z_sum.is_zero() {
                    return Err(Error::InconsistentSystem {
                        detail: "type II endpoint vertices do not sum to 0",
                    });
                }
            }
            SystemType::III => {
                for path in &self.paths {
                    let Edgepath::Path { partial: None, start, .. } = path else {
                        return Err(Error::InconsistentSystem {
                            detail: "type III path with a partial or cap",
                        });
                    };
                    if start != &DiagramVertex::Infinity {
                        return Err(Error::InconsistentSystem {
                            detail: "type III path must start at <1/0>",
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

impl CandidateFamily {
    pub fn base(&self) -> &EdgepathSystem {
        &self.base
    }

    pub fn w_start(&self) -> &Fraction {
        &self.w_start
    }

    pub fn w_end(&self) -> Option<&Fraction> {
        self.w_end.as_ref()
    }

    pub fn left_closed(&self) -> bool {
        self.left_closed
    }

    pub fn right_closed(&self) -> bool {
        self.right_closed
    }

    pub fn ratio_fn(&self) -> &PiecewiseLinear {
        &self.ratio_fn
    }

    pub fn source_basic(&self) -> &[BasicEdgepath] {
        &self.source_basic
    }

    pub fn contains(&self, w: &Fraction) -> bool {
        let left_ok = if self.left_closed { w >= &self.w_start } else { w > &self.w_start };
        let right_ok = match &self.w_end {
            None => true,
            Some(end) => {
                if self.right_closed {
                    w <= end
                } else {
                    w < end
                }
            }
        };
        left_ok && right_ok
    }

    /// The concrete type I system obtained by cutting at `w` (requires `w`
    /// inside the interval and `w > 1`).
    pub fn member_at(&self, w: &Fraction) -> Result<EdgepathSystem> {
        if !self.contains(w) {
            return Err(Error::Domain { detail: "w outside the family interval" });
        }
        if w <= &Fraction::one() {
            return Err(Error::Domain { detail: "family member requires w > 1" });
        }
        type_i_system(&self.source_basic, w)
    }
}

/// All `2^N` basic edgepath systems in lexicographic order (`a` before `b`).
pub fn basic_systems(knot: &PretzelKnot) -> Vec<Vec<BasicEdgepath>> {
    let params = knot.params();
    let n = params.len();
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0u64..(1u64 << n) {
        let sys: Vec<BasicEdgepath> = params
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                let variant = if mask >> (n - 1 - i) & 1 == 0 { Variant::A } else { Variant::B };
                BasicEdgepath::new(p, variant).unwrap()
            })
            .collect();
        out.push(sys);
    }
    out
}

/// Edgepath length: complete edges count 1, a leading partial edge counts its
/// left barycentric coefficient, constant caps count 0.
pub fn edgepath_length(path: &Edgepath) -> Fraction {
    path.length()
}

/// `-chi/#s` of a candidate system, computed structurally from its paths.
pub fn chi_ratio(system: &EdgepathSystem) -> Result<Fraction> {
    system.validate()?;
    let n = system.paths.len() as i64;
    match system.type_tag {
        SystemType::III => Ok(system
            .paths
            .iter()
            .map(Edgepath::length_positive_u)
            .fold(Fraction::zero(), |acc, l| &acc + &l)),
        SystemType::II => {
            let lengths = system
                .paths
                .iter()
                .map(Edgepath::length_positive_u)
                .fold(Fraction::zero(), |acc, l| &acc + &l);
            let v = Fraction::from_int(system.vertical_count as i64);
            Ok(&(&lengths + &v) - &Fraction::from_int(2))
        }
        SystemType::I => {
            let w0 = system.w0.as_ref().unwrap();
            let mut total = Fraction::zero();
            let mut n_const: i64 = 0;
            let mut cap_recip = Fraction::zero();
            for (path, basic) in system.paths.iter().zip(&system.source_basic) {
                if path.is_constant() {
                    n_const += 1;
                    cap_recip += &Fraction::new(1, basic.abs_p());
                } else {
                    total += &path.length();
                }
            }
            let slope = &Fraction::from_int(n - 2) - &cap_recip;
            total += &Fraction::from_int(n_const - n);
            total += &(&slope * w0);
            Ok(total)
        }
    }
}

fn type_i_system(basics: &[BasicEdgepath], w0: &Fraction) -> Result<EdgepathSystem> {
    let paths: Vec<Edgepath> = basics
        .iter()
        .map(|b| b.cut(w0))
        .collect::<Result<_>>()?;
    let sys = EdgepathSystem {
        paths,
        type_tag: SystemType::I,
        w0: Some(w0.clone()),
        vertical_count: 0,
        source_basic: basics.to_vec(),
    };
    sys.validate()?;
    Ok(sys)
}

/// Solves the gluing equation for every basic system: isolated roots with
/// `w > 1` become concrete systems, flat-zero intervals become families.
pub fn solve_type_i(knot: &PretzelKnot) -> Result<TypeISolutions> {
    if knot.tangle_count() < 3 {
        return Err(Error::TooFewTangles { n: knot.tangle_count() });
    }
    let one = Fraction::one();
    let mut families = Vec::new();
    let all_roots: Vec<_> = basic_systems(knot)
        .into_iter()
        .map(|basics| {
            let roots = gluing_sum(&basics).roots();
            (basics, roots)
        })
        .collect();
    for (basics, roots) in &all_roots {
        for interval in &roots.intervals {
            // clip to w > 1: the left end is open exactly when it sits at 1
            let (w_start, left_closed) = if interval.start <= one {
                (one.clone(), false)
            } else {
                (interval.start.clone(), true)
            };
            if let Some(end) = &interval.end {
                if end < &w_start || (end == &w_start && !left_closed) {
                    continue;
                }
            }
            let base = family_base(basics, &w_start)?;
            families.push(CandidateFamily {
                base,
                w_start,
                w_end: interval.end.clone(),
                left_closed,
                right_closed: interval.end.is_some(),
                ratio_fn: big_x(basics),
                source_basic: basics.clone(),
            });
        }
    }
    // Isolated roots second: a root whose concrete system coincides with a
    // family member (typically at an interval endpoint, where the cut
    // degenerates to the tangle vertex) or with an earlier root's system is
    // the same candidate and is emitted once.
    let mut systems: Vec<EdgepathSystem> = Vec::new();
    for (basics, roots) in &all_roots {
        for w0 in &roots.isolated {
            if w0 <= &one {
                continue;
            }
            let sys = type_i_system(basics, w0)?;
            let in_family = families.iter().any(|f: &CandidateFamily| {
                f.contains(w0)
                    && f.member_at(w0).map_or(false, |m| m.paths() == sys.paths())
            });
            let seen = systems
                .iter()
                .any(|s| s.w0() == sys.w0() && s.paths() == sys.paths());
            if !in_family && !seen {
                systems.push(sys);
            }
        }
    }
    Ok(TypeISolutions { systems, families })
}

/// The system at the interval's left end; built even at `w = 1`, where the
/// cuts are the complete basic paths (a limit object, not a family member
/// when the left end is open).
fn family_base(basics: &[BasicEdgepath], w: &Fraction) -> Result<EdgepathSystem> {
    let paths: Vec<Edgepath> = basics
        .iter()
        .map(|b| b.cut(w))
        .collect::<Result<_>>()?;
    Ok(EdgepathSystem {
        paths,
        type_tag: SystemType::I,
        w0: Some(w.clone()),
        vertical_count: 0,
        source_basic: basics.to_vec(),
    })
}

/// All type II systems with at most `max_vertical` vertical edges: each basic
/// path is prefixed by vertical edges shifting its `u = 0` endpoint from
/// `e_i` (0 for variant a, sign for variant b) to an integer `z_i`, subject
/// to `sum z_i = 0`.
pub fn enumerate_type_ii(knot: &PretzelKnot, max_vertical: u32) -> Result<Vec<EdgepathSystem>> {
    if knot.tangle_count() < 3 {
        return Err(Error::TooFewTangles { n: knot.tangle_count() });
    }
    let mut out = Vec::new();
    for basics in basic_systems(knot) {
        let ends: Vec<i64> = basics
            .iter()
            .map(|b| match b.variant() {
                Variant::A => 0,
                Variant::B => b.sign(),
            })
            .collect();
        let mut shifts = Vec::new();
        enumerate_shifts(&ends, max_vertical as i64, 0, &mut Vec::new(), &mut shifts);
        for zs in shifts {
            let v: i64 = zs.iter().zip(&ends).map(|(z, e)| (z - e).abs()).sum();
            let paths: Vec<Edgepath> = basics
                .iter()
                .zip(&zs)
                .zip(&ends)
                .map(|((b, &z), &e)| prefixed_with_verticals(b, z, e))
                .collect();
            let sys = EdgepathSystem {
                paths,
                type_tag: SystemType::II,
                w0: None,
                vertical_count: v as u32,
                source_basic: basics.clone(),
            };
            sys.validate()?;
            out.push(sys);
        }
    }
    Ok(out)
}

/// Enumerates integer vectors z with `sum z = 0` and `sum |z_i - e_i|`
/// within budget, in lexicographic order.
fn enumerate_shifts(
    ends: &[i64],
    budget: i64,
    z_sum: i64,
    acc: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    let i = acc.len();
    if i == ends.len() {
        if z_sum == 0 {
            out.push(acc.clone());
        }
        return;
    }
    // |sum of the remaining z_i| can grow by at most budget beyond the
    // remaining endpoints' own sum, which bounds the search exactly.
    let e = ends[i];
    for z in (e - budget)..=(e + budget) {
        let cost = (z - e).abs();
        let remaining: i64 = ends[i + 1..].iter().sum();
        let slack = budget - cost;
        // after choosing z the final sum must reach 0
        if (z_sum + z + remaining).abs() > slack {
            continue;
        }
        acc.push(z);
        enumerate_shifts(ends, slack, z_sum + z, acc, out);
        acc.pop();
    }
}

fn prefixed_with_verticals(basic: &BasicEdgepath, z: i64, e: i64) -> Edgepath {
    let mut edges: Vec<DiagramEdge> = Vec::new();
    if z < e {
        for k in z..e {
            edges.push(DiagramEdge::vertical(k));
        }
    } else {
        for k in (e..z).rev() {
            edges.push(DiagramEdge::vertical(k));
        }
    }
    let Edgepath::Path { edges: basic_edges, .. } = basic.path() else { unreachable!() };
    edges.extend(basic_edges);
    Edgepath::Path {
        partial: None,
        start: DiagramVertex::Interior(Fraction::from_int(z)),
        edges,
    }
}

/// The `2^N` type III systems: each basic path prefixed with the edge from
/// `<1/0>` to its integer starting vertex.
pub fn enumerate_type_iii(knot: &PretzelKnot) -> Result<Vec<EdgepathSystem>> {
    if knot.tangle_count() < 3 {
        return Err(Error::TooFewTangles { n: knot.tangle_count() });
    }
    let mut out = Vec::new();
    for basics in basic_systems(knot) {
        let paths: Vec<Edgepath> = basics
            .iter()
            .map(|b| {
                let e = match b.variant() {
                    Variant::A => 0,
                    Variant::B => b.sign(),
                };
                let mut edges = vec![DiagramEdge::infinity(e)];
                let Edgepath::Path { edges: basic_edges, .. } = b.path() else { unreachable!() };
                edges.extend(basic_edges);
                Edgepath::Path {
                    partial: None,
                    start: DiagramVertex::Infinity,
                    edges,
                }
            })
            .collect();
        let sys = EdgepathSystem {
            paths,
            type_tag: SystemType::III,
            w0: None,
            vertical_count: 0,
            source_basic: basics.clone(),
        };
        sys.validate()?;
        out.push(sys);
    }
    Ok(out)
}

/// Statistics of a candidate system.
pub fn stats(system: &EdgepathSystem) -> Result<CandidateStats> {
    let chi = chi_ratio(system)?;
    let mut sheets_lb = BigInt::from(1);
    let mut has_partials = false;
    let mut has_caps = false;
    for path in &system.paths {
        if path.is_constant() {
            has_caps = true;
        }
        if let Some(pt) = path.partial() {
            if pt.edge.kind() == EdgeKind::NonHorizontal {
                if let PointPosition::Barycentric(a) = &pt.position {
                    has_partials = true;
                    sheets_lb = sheets_lb.lcm(a.denom());
                }
            }
        }
    }
    let spanning_candidate = !has_partials && !has_caps;
    let orientability = if system.is_gamma_a() {
        match crate::knot::parse_pretzel(&system.tangle_params()) {
            Ok(k) if k.class() == KnotClass::B => Orientability::Orientable,
            Ok(_) => Orientability::Nonorientable,
            Err(_) => Orientability::Unknown,
        }
    } else {
        Orientability::Unknown
    };
    Ok(CandidateStats {
        chi_ratio: chi,
        sheets_lb,
        has_caps,
        spanning_candidate,
        orientability,
    })
}
