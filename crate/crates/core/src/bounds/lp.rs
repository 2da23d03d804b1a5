//! Exact two-variable linear programs solved by vertex enumeration.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// `a * x + b * y <= rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfPlane {
    pub a: BigRational,
    pub b: BigRational,
    pub rhs: BigRational,
}

impl HalfPlane {
    pub fn new(a: BigRational, b: BigRational, rhs: BigRational) -> Self {
        Self { a, b, rhs }
    }

    fn lhs(&self, x: &BigRational, y: &BigRational) -> BigRational {
        &self.a * x + &self.b * y
    }

    pub fn contains(&self, x: &BigRational, y: &BigRational) -> bool {
        self.lhs(x, y) <= self.rhs
    }

    pub fn is_tight(&self, x: &BigRational, y: &BigRational) -> bool {
        self.lhs(x, y) == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal {
        x: BigRational,
        y: BigRational,
        value: BigRational,
        /// Indices of the constraints satisfied with equality.
        tight: Vec<usize>,
    },
    /// The objective grows without bound along `direction`.
    Unbounded { direction: (BigRational, BigRational) },
    Infeasible,
    /// All constraint normals are parallel, so the region has no vertex.
    NoVertex,
}

/// Maximizes `cx * x + cy * y` over the intersection of the half-planes by
/// checking every pairwise intersection point of the boundary lines.
pub fn maximize(cx: &BigRational, cy: &BigRational, constraints: &[HalfPlane]) -> LpOutcome {
    let mut best: Option<(BigRational, BigRational, BigRational)> = None;
    let mut spans_plane = false;
    for (i, p) in constraints.iter().enumerate() {
        for q in &constraints[i + 1..] {
            let det = &p.a * &q.b - &q.a * &p.b;
            if det.is_zero() {
                continue;
            }
            spans_plane = true;
            let x = (&p.rhs * &q.b - &q.rhs * &p.b) / &det;
            let y = (&p.a * &q.rhs - &q.a * &p.rhs) / &det;
            if !constraints.iter().all(|c| c.contains(&x, &y)) {
                continue;
            }
            let value = cx * &x + cy * &y;
            if best.as_ref().is_none_or(|(_, _, v)| value > *v) {
                best = Some((x, y, value));
            }
        }
    }
    let Some((x, y, value)) = best else {
        return if spans_plane { LpOutcome::Infeasible } else { LpOutcome::NoVertex };
    };

    // The recession cone is generated by boundary directions of the
    // constraints; any such ray that raises the objective means unbounded.
    for c in constraints {
        for sign in [1i32, -1] {
            let (dx, dy) = if sign > 0 { (-c.b.clone(), c.a.clone()) } else { (c.b.clone(), -c.a.clone()) };
            let recedes = constraints.iter().all(|k| !(&k.a * &dx + &k.b * &dy).is_positive());
            if recedes && (cx * &dx + cy * &dy).is_positive() {
                return LpOutcome::Unbounded { direction: (dx, dy) };
            }
        }
    }

    let tight = constraints
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_tight(&x, &y))
        .map(|(i, _)| i)
        .collect();
    LpOutcome::Optimal { x, y, value, tight }
}
