//! Projective cell complex of a wiring diagram.
//!
//! The diagram is lifted to its orientation double cover: the moves are laid
//! out once, then again mirrored top-to-bottom, around a cylinder whose two
//! ends are capped. This is a sphere, and every wire becomes a closed curve
//! on it. Faces are traced with an ordinary rotation system and the
//! projective faces are the antipodal pairs of sphere faces.
//!
//! Rotation at a vertex of multiplicity `b`: its `2b` darts are listed on the
//! right side top to bottom, then on the left side bottom to top.

use serde::Serialize;
use thiserror::Error;

use super::{AllowableSequence, WiringError};
use crate::profiles::{ComplexSummary, PjProfile, ProfileError, TiProfile};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error(transparent)]
    Wiring(#[from] WiringError),
    #[error("cannot build the complex of a trivial arrangement")]
    Trivial,
    #[error("internal inconsistency in cell complex: {0}")]
    Inconsistent(String),
}

impl From<ProfileError> for ComplexError {
    fn from(e: ProfileError) -> Self {
        ComplexError::Inconsistent(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct SphereFace {
    sides: u32,
    antipode: u32,
}

/// One region of the projective plane, seen as a pair of antipodal sphere faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectiveFace {
    pub sides: u32,
    pub sphere_faces: (u32, u32),
}

/// A projective edge: a piece of one wire between consecutive crossing points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectiveEdge {
    /// 1-based wire label.
    pub wire: u32,
    /// Move indices of the two endpoints, in sweep direction.
    pub tail: u32,
    pub head: u32,
    /// Side counts of the two regions on either side of the edge.
    pub face_sides: (u32, u32),
    /// The edge crosses the boundary of the diagram.
    pub wraps: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub simplicial: bool,
    pub generic: bool,
    pub near_pencil: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeViolation {
    pub edge: ProjectiveEdge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimpleEdgeCheck {
    /// `t_n` or `t_{n-1}` is nonzero.
    NotApplicable,
    Checked(Vec<EdgeViolation>),
}

#[derive(Debug, Clone)]
pub struct CellComplex {
    n: u32,
    /// Multiplicity of each projective vertex (one per move).
    multiplicity: Vec<u32>,
    dart_vertex: Vec<u32>,
    dart_wire: Vec<u32>,
    /// Other end of the edge.
    alpha: Vec<u32>,
    /// Next dart in the rotation at the same vertex.
    sigma: Vec<u32>,
    face_of: Vec<u32>,
    /// Rightward darts (edge tails) with a flag for edges crossing a seam.
    edge_tails: Vec<(u32, bool)>,
    faces: Vec<SphereFace>,
    projective: Vec<ProjectiveFace>,
}

struct Visit {
    vertex: u32,
    left: u32,
    right: u32,
}

impl CellComplex {
    pub fn build(seq: &AllowableSequence) -> Result<Self, ComplexError> {
        if seq.validate()?.trivial {
            return Err(ComplexError::Trivial);
        }
        let n = seq.n();
        let nu = n as usize;
        let half = seq.moves().len();
        let multiplicity: Vec<u32> = seq.moves().iter().map(|m| m.len).collect();

        // Blocks around the cylinder: the moves, then their mirror images.
        let blocks: Vec<(usize, usize)> = seq
            .moves()
            .iter()
            .map(|m| ((m.pos - 1) as usize, m.len as usize))
            .chain(seq.moves().iter().map(|m| (nu - (m.pos - 1) as usize - m.len as usize, m.len as usize)))
            .collect();

        let total_darts: usize = blocks.iter().map(|&(_, b)| 2 * b).sum();
        let mut dart_vertex = Vec::with_capacity(total_darts);
        let mut dart_wire = vec![0u32; total_darts];
        let mut sigma = Vec::with_capacity(total_darts);
        let mut visits: Vec<Vec<Visit>> = (0..nu).map(|_| Vec::new()).collect();

        let mut order: Vec<u32> = (0..n).collect();
        let mut base = 0usize;
        for (x, &(p0, b)) in blocks.iter().enumerate() {
            for slot in 0..2 * b {
                dart_vertex.push(x as u32);
                sigma.push((base + (slot + 1) % (2 * b)) as u32);
            }
            let block = &mut order[p0..p0 + b];
            let mut left = vec![0u32; b];
            for (r, &w) in block.iter().enumerate() {
                let d = base + b + (b - 1 - r);
                dart_wire[d] = w;
                left[r] = d as u32;
            }
            block.reverse();
            // The wire at left offset r leaves on the right at offset b-1-r.
            for (r, &w) in block.iter().enumerate() {
                let d = base + r;
                dart_wire[d] = w;
                visits[w as usize].push(Visit {
                    vertex: x as u32,
                    left: left[b - 1 - r],
                    right: d as u32,
                });
            }
            base += 2 * b;
        }
        if order.iter().enumerate().any(|(p, &w)| w as usize != p) {
            return Err(ComplexError::Inconsistent("double cover does not close up".into()));
        }

        let mut alpha = vec![u32::MAX; total_darts];
        let mut edge_tails = Vec::new();
        let mut antipode = vec![u32::MAX; total_darts];
        for wire_visits in &visits {
            let len = wire_visits.len();
            if len < 4 || len % 2 != 0 {
                return Err(ComplexError::Trivial);
            }
            for k in 0..len {
                let here = &wire_visits[k];
                let next = &wire_visits[(k + 1) % len];
                alpha[here.right as usize] = next.left;
                alpha[next.left as usize] = here.right;
                let seam = (here.vertex as usize) < half && (next.vertex as usize) >= half
                    || (here.vertex as usize) >= half && (next.vertex as usize) < half
                    || k + 1 == len;
                edge_tails.push((here.right, seam));
                let opposite = &wire_visits[(k + len / 2) % len];
                antipode[here.left as usize] = opposite.left;
                antipode[here.right as usize] = opposite.right;
            }
        }
        if alpha.iter().chain(antipode.iter()).any(|&d| d == u32::MAX) {
            return Err(ComplexError::Inconsistent("unmatched dart".into()));
        }

        // Faces are the orbits of sigma after alpha.
        let mut face_of = vec![u32::MAX; total_darts];
        let mut sides = Vec::new();
        for start in 0..total_darts {
            if face_of[start] != u32::MAX {
                continue;
            }
            let id = sides.len() as u32;
            let mut d = start;
            let mut count = 0u32;
            while face_of[d] == u32::MAX {
                face_of[d] = id;
                count += 1;
                d = sigma[alpha[d] as usize] as usize;
            }
            if d != start {
                return Err(ComplexError::Inconsistent("face walk did not close".into()));
            }
            sides.push(count);
        }

        // The antipodal map reverses orientation, so the image of the face
        // through d is the face through alpha(antipode(d)).
        let mut faces: Vec<SphereFace> =
            sides.iter().map(|&s| SphereFace { sides: s, antipode: u32::MAX }).collect();
        for d in 0..total_darts {
            let f = face_of[d] as usize;
            let g = face_of[alpha[antipode[d] as usize] as usize];
            if faces[f].antipode == u32::MAX {
                faces[f].antipode = g;
            } else if faces[f].antipode != g {
                return Err(ComplexError::Inconsistent("antipodal face image not unique".into()));
            }
        }
        let mut projective = Vec::new();
        for (f, face) in faces.iter().enumerate() {
            let g = face.antipode as usize;
            if g == f || faces[g].antipode as usize != f || faces[g].sides != face.sides {
                return Err(ComplexError::Inconsistent(format!(
                    "face {f} is not paired with an antipodal twin"
                )));
            }
            if f < g {
                projective.push(ProjectiveFace { sides: face.sides, sphere_faces: (f as u32, g as u32) });
            }
        }

        let cc = CellComplex {
            n,
            multiplicity,
            dart_vertex,
            dart_wire,
            alpha,
            sigma,
            face_of,
            edge_tails,
            faces,
            projective,
        };
        let sphere_euler = 2 * cc.vertex_count() as i64 - 2 * cc.edge_count() as i64
            + cc.faces.len() as i64;
        if sphere_euler != 2 {
            return Err(ComplexError::Inconsistent(format!(
                "sphere Euler characteristic is {sphere_euler}"
            )));
        }
        Ok(cc)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Projective vertex count (one per move).
    pub fn vertex_count(&self) -> u64 {
        self.multiplicity.len() as u64
    }

    pub fn edge_count(&self) -> u64 {
        self.multiplicity.iter().map(|&b| b as u64).sum()
    }

    pub fn face_count(&self) -> u64 {
        self.projective.len() as u64
    }

    pub fn summary(&self) -> ComplexSummary {
        ComplexSummary { v: self.vertex_count(), e: self.edge_count(), f: self.face_count() }
    }

    pub fn multiplicity(&self, vertex: usize) -> u32 {
        self.multiplicity[vertex]
    }

    pub fn faces(&self) -> &[ProjectiveFace] {
        &self.projective
    }

    pub fn sphere_face_count(&self) -> usize {
        self.faces.len()
    }

    /// Rotation successor of a dart on the double cover.
    pub fn rotation_next(&self, dart: usize) -> usize {
        self.sigma[dart] as usize
    }

    /// Vertex of the double cover carrying `dart`.
    pub fn dart_vertex(&self, dart: usize) -> usize {
        self.dart_vertex[dart] as usize
    }

    /// Projective edges, one per antipodal pair of sphere edges.
    pub fn edges(&self) -> impl Iterator<Item = ProjectiveEdge> + '_ {
        let half = self.multiplicity.len() as u32;
        self.edge_tails.iter().filter_map(move |&(tail, wraps)| {
            let tv = self.dart_vertex[tail as usize];
            if tv >= half {
                return None;
            }
            let head = self.alpha[tail as usize] as usize;
            let hv = self.dart_vertex[head];
            let f1 = self.faces[self.face_of[tail as usize] as usize].sides;
            let f2 = self.faces[self.face_of[head] as usize].sides;
            Some(ProjectiveEdge {
                wire: self.dart_wire[tail as usize] + 1,
                tail: tv,
                head: hv % half,
                face_sides: (f1, f2),
                wraps,
            })
        })
    }

    /// Face-size profile, cross-checked against the vertex/edge/face counts.
    pub fn pj_profile(&self) -> Result<PjProfile, ComplexError> {
        let pj = PjProfile::new(self.projective.iter().map(|f| (f.sides, 1)))?;
        let from_faces = pj.vef()?;
        if from_faces != self.summary() {
            return Err(ComplexError::Inconsistent(format!(
                "face profile gives {from_faces}, complex has {}",
                self.summary()
            )));
        }
        if self.summary().euler_characteristic() != 1 {
            return Err(ComplexError::Inconsistent("projective Euler characteristic is not 1".into()));
        }
        Ok(pj)
    }

    /// Multiplicity profile read off the vertices.
    pub fn ti_profile(&self) -> Result<TiProfile, ComplexError> {
        Ok(TiProfile::new(self.n, self.multiplicity.iter().map(|&b| (b, 1)))?)
    }

    pub fn classify(&self, ti: &TiProfile) -> Classification {
        let n = ti.n();
        Classification {
            simplicial: self.projective.iter().all(|f| f.sides == 3),
            generic: ti.iter().all(|(i, _)| i < 3),
            near_pencil: n >= 2 && ti.get(n - 1) == 1,
        }
    }

    /// Every edge between two double points borders at least one region with
    /// four or more sides, provided `t_n = t_{n-1} = 0`.
    pub fn check_simple_edge_property(&self, ti: &TiProfile) -> SimpleEdgeCheck {
        let n = ti.n();
        if ti.get(n) != 0 || ti.get(n - 1) != 0 {
            return SimpleEdgeCheck::NotApplicable;
        }
        let violations = self
            .edges()
            .filter(|e| {
                self.multiplicity[e.tail as usize] == 2
                    && self.multiplicity[e.head as usize] == 2
                    && e.face_sides.0 == 3
                    && e.face_sides.1 == 3
            })
            .map(|edge| EdgeViolation { edge })
            .collect();
        SimpleEdgeCheck::Checked(violations)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wiring::Move;

    fn seq(n: u32, moves: &[(u32, u32)]) -> AllowableSequence {
        AllowableSequence::new(n, moves.iter().map(|&(p, l)| Move::new(p, l)).collect())
    }

    fn generic4() -> AllowableSequence {
        seq(4, &[(1, 2), (2, 2), (3, 2), (1, 2), (2, 2), (1, 2)])
    }

    fn near_pencil4() -> AllowableSequence {
        seq(4, &[(1, 3), (3, 2), (2, 2), (1, 2)])
    }

    fn generic5() -> AllowableSequence {
        seq(5, &[(1, 2), (2, 2), (3, 2), (4, 2), (1, 2), (2, 2), (3, 2), (1, 2), (2, 2), (1, 2)])
    }

    fn pj(counts: &[(u32, u64)]) -> PjProfile {
        PjProfile::new(counts.iter().copied()).unwrap()
    }

    #[test]
    fn three_generic_wires() {
        let cc = CellComplex::build(&seq(3, &[(1, 2), (2, 2), (1, 2)])).unwrap();
        assert_eq!(cc.summary(), ComplexSummary { v: 3, e: 6, f: 4 });
        assert_eq!(cc.pj_profile().unwrap(), pj(&[(3, 4)]));
        assert_eq!(cc.sphere_face_count(), 8);
        let ti = cc.ti_profile().unwrap();
        let class = cc.classify(&ti);
        assert!(class.simplicial && class.generic);
    }

    #[test]
    fn four_generic_wires() {
        let cc = CellComplex::build(&generic4()).unwrap();
        assert_eq!(cc.summary(), ComplexSummary { v: 6, e: 12, f: 7 });
        assert_eq!(cc.pj_profile().unwrap(), pj(&[(3, 4), (4, 3)]));
    }

    #[test]
    fn four_wire_near_pencil() {
        let cc = CellComplex::build(&near_pencil4()).unwrap();
        assert_eq!(cc.summary(), ComplexSummary { v: 4, e: 9, f: 6 });
        assert_eq!(cc.pj_profile().unwrap(), pj(&[(3, 6)]));
        let ti = cc.ti_profile().unwrap();
        let class = cc.classify(&ti);
        assert!(class.simplicial && class.near_pencil && !class.generic);
        assert_eq!(cc.check_simple_edge_property(&ti), SimpleEdgeCheck::NotApplicable);
    }

    #[test]
    fn five_generic_wires_have_a_quadrilateral() {
        let cc = CellComplex::build(&generic5()).unwrap();
        let ti = cc.ti_profile().unwrap();
        let class = cc.classify(&ti);
        assert!(class.generic && !class.simplicial);
        assert!(cc.pj_profile().unwrap().get(4) > 0);
        assert_eq!(cc.check_simple_edge_property(&ti), SimpleEdgeCheck::Checked(vec![]));
    }

    #[test]
    fn simple_edge_on_four_generic() {
        let cc = CellComplex::build(&generic4()).unwrap();
        let ti = cc.ti_profile().unwrap();
        assert_eq!(cc.check_simple_edge_property(&ti), SimpleEdgeCheck::Checked(vec![]));
    }

    #[test]
    fn trivial_rejected() {
        assert_eq!(CellComplex::build(&seq(3, &[(1, 3)])).unwrap_err(), ComplexError::Trivial);
    }

    #[test]
    fn invalid_sequence_rejected() {
        assert!(matches!(
            CellComplex::build(&seq(3, &[(1, 2), (1, 2)])),
            Err(ComplexError::Wiring(_))
        ));
    }

    #[test]
    fn projective_edges_cover_each_edge_once() {
        let cc = CellComplex::build(&near_pencil4()).unwrap();
        let edges: Vec<_> = cc.edges().collect();
        assert_eq!(edges.len() as u64, cc.edge_count());
        // each wire contributes exactly one edge across the diagram boundary
        assert_eq!(edges.iter().filter(|e| e.wraps).count(), 4);
    }

    #[test]
    fn rotation_is_a_cycle_per_vertex() {
        let cc = CellComplex::build(&generic5()).unwrap();
        for d in 0..cc.sigma.len() {
            let mut e = cc.rotation_next(d);
            let mut steps = 1;
            while e != d {
                assert_eq!(cc.dart_vertex(e), cc.dart_vertex(d));
                e = cc.rotation_next(e);
                steps += 1;
            }
            assert_eq!(steps, 4);
        }
    }
}
