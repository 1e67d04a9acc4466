//! Exact convex polyhedra of the form `conv(points) + cone(rays)`.
//!
//! Both representations are kept: a minimal vertex/ray description and an
//! irredundant facet description with primitive integer normals.  Conversion
//! runs the double description method on the homogenization (points embedded
//! at height one, recession rays at height zero), entirely over exact
//! arithmetic, so equality of polyhedra is decidable by comparing canonical
//! facet sets.

use crate::arith::{dot_ii, dot_ir, primitive, primitive_of_rational, rat_int, to_rat_vec, Rat};
use crate::error::{Error, Result};
use crate::lattice;
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

/// Closed halfspace `<normal, x> >= offset` with primitive integer normal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: Rat,
}

/// A face of a polyhedron, identified by the vertices and recession rays it
/// contains and by the facets that cut it out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    /// Indices into `Polyhedron::vertices`.
    pub vertex_ids: BTreeSet<usize>,
    /// Indices into `Polyhedron::rays`.
    pub ray_ids: BTreeSet<usize>,
    /// Indices of all facets containing the face.
    pub defining_facets: BTreeSet<usize>,
    /// Affine dimension of the face.
    pub dim: usize,
}

impl Face {
    /// A face is compact exactly when no recession ray lies on it.
    pub fn is_compact(&self) -> bool {
        self.ray_ids.is_empty()
    }
}

/// Exact value of a scaling problem along a direction: either attained at a
/// rational parameter or never attained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScaleValue {
    Finite(Rat),
    Infinite,
}

impl ScaleValue {
    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            ScaleValue::Finite(r) => Some(r),
            ScaleValue::Infinite => None,
        }
    }
}

/// Pointed rational polyhedron `conv(vertices) + cone(rays)`.
#[derive(Debug, Clone)]
pub struct Polyhedron {
    dim: usize,
    vertices: Vec<Vec<Rat>>,
    rays: Vec<Vec<i64>>,
    facets: Vec<Facet>,
    /// Facets cleared of denominators, for fast lattice-point tests:
    /// `(d*normal, d*offset)` with `d` the offset denominator.
    lattice_facets: Vec<(Vec<i64>, i64)>,
}

impl PartialEq for Polyhedron {
    /// Geometric equality: same ambient dimension and the same canonical
    /// facet set.  (Vertex data is determined by the facets.)
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.facets == other.facets
    }
}

impl Eq for Polyhedron {}

/// The standard basis rays of the positive orthant in `n` variables.
pub fn standard_orthant_rays(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

impl Polyhedron {
    /// Convex hull of `points` fattened by the recession cone generated by
    /// `cone_rays`.  Produces the minimal vertex/ray description and the
    /// irredundant facet description.
    pub fn hull_with_recession(points: &[Vec<Rat>], cone_rays: &[Vec<i64>]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::HypothesisNotMet(
                "hull requires at least one point".into(),
            ));
        }
        let dim = points[0].len();
        if dim == 0 {
            return Err(Error::HypothesisNotMet("ambient dimension must be positive".into()));
        }
        for p in points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: p.len() });
            }
        }
        for r in cone_rays {
            if r.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: r.len() });
            }
        }

        // Homogenize: points at height one, rays at height zero.
        let mut gens: Vec<Vec<i64>> = Vec::new();
        for p in points {
            let mut h = Vec::with_capacity(dim + 1);
            h.push(Rat::from_integer(1.into()));
            h.extend(p.iter().cloned());
            gens.push(primitive_of_rational(&h));
        }
        for r in cone_rays {
            if r.iter().all(|&x| x == 0) {
                continue;
            }
            let mut h = Vec::with_capacity(dim + 1);
            h.push(0);
            h.extend_from_slice(r);
            gens.push(primitive(&h));
        }

        // V -> H: facets are the extreme rays of the dual cone.
        let dual = dd_cone(&gens, dim + 1);
        let mut facet_set: BTreeSet<Facet> = BTreeSet::new();
        for line in &dual.lines {
            // Implicit equality: emit both halfspaces.
            let u = &line[1..];
            debug_assert!(u.iter().any(|&x| x != 0), "height equality cannot occur");
            for sign in [1i64, -1] {
                let raw: Vec<i64> = u.iter().map(|&x| sign * x).collect();
                let g = crate::arith::content(&raw);
                let normal = primitive(&raw);
                facet_set.insert(Facet {
                    normal,
                    offset: Rat::new((-sign * line[0]).into(), g.into()),
                });
            }
        }
        for ray in &dual.rays {
            let u = &ray[1..];
            if u.iter().all(|&x| x == 0) {
                continue; // the trivial supporting functional `1 >= 0`
            }
            let g = crate::arith::content(u);
            facet_set.insert(Facet {
                normal: primitive(u),
                offset: Rat::new((-ray[0]).into(), g.into()),
            });
        }
        let facets: Vec<Facet> = facet_set.into_iter().collect();

        // H -> V: extreme rays of the homogenization cone.
        let mut rows: Vec<Vec<i64>> = Vec::with_capacity(facets.len() + 1);
        for f in &facets {
            rows.push(homogenize_facet(f));
        }
        let mut height = vec![0i64; dim + 1];
        height[0] = 1;
        rows.push(height);
        let vres = dd_cone(&rows, dim + 1);
        if !vres.lines.is_empty() {
            return Err(Error::NonStronglyConvexCone);
        }
        let mut vertices: Vec<Vec<Rat>> = Vec::new();
        let mut rays: Vec<Vec<i64>> = Vec::new();
        for r in &vres.rays {
            if r[0] > 0 {
                let h = rat_int(r[0]);
                vertices.push(r[1..].iter().map(|&x| rat_int(x) / &h).collect());
            } else {
                debug_assert_eq!(r[0], 0);
                rays.push(primitive(&r[1..]));
            }
        }
        debug_assert!(!vertices.is_empty(), "a pointed nonempty polyhedron has a vertex");
        vertices.sort();
        rays.sort();
        let lattice_facets = facets.iter().map(lattice_form).collect();
        Ok(Polyhedron { dim, vertices, rays, facets, lattice_facets })
    }

    /// Hull of integer points with the given recession rays.
    pub fn hull_lattice(points: &[Vec<i64>], cone_rays: &[Vec<i64>]) -> Result<Self> {
        let pts: Vec<Vec<Rat>> = points.iter().map(|p| to_rat_vec(p)).collect();
        Self::hull_with_recession(&pts, cone_rays)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<Rat>] {
        &self.vertices
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Exact membership test for a rational point.
    pub fn contains(&self, point: &[Rat]) -> Result<bool> {
        if point.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: point.len() });
        }
        Ok(self
            .facets
            .iter()
            .all(|f| dot_ir(&f.normal, point) >= f.offset))
    }

    /// Membership of an integer point in the dilation `scale * P`, using only
    /// integer arithmetic.  `scale` must be positive.
    pub fn contains_lattice(&self, point: &[i64], scale: i64) -> Result<bool> {
        if point.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: point.len() });
        }
        debug_assert!(scale > 0);
        Ok(self
            .lattice_facets
            .iter()
            .all(|(n, c)| dot_ii(n, point) >= scale * c))
    }

    /// The dilation `scale * P` (vertices scaled, recession unchanged).
    pub fn dilate(&self, scale: i64) -> Polyhedron {
        debug_assert!(scale > 0);
        let s = rat_int(scale);
        Polyhedron {
            dim: self.dim,
            vertices: self
                .vertices
                .iter()
                .map(|v| v.iter().map(|x| x * &s).collect())
                .collect(),
            rays: self.rays.clone(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet { normal: f.normal.clone(), offset: &f.offset * &s })
                .collect(),
            lattice_facets: self
                .lattice_facets
                .iter()
                .map(|(n, c)| (n.clone(), c * scale))
                .collect(),
        }
    }

    /// `min { t >= 0 : t * direction` lies in the polyhedron `}`.
    pub fn axis_scale(&self, direction: &[Rat]) -> Result<ScaleValue> {
        if direction.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: direction.len() });
        }
        let mut lower = Rat::zero();
        let mut upper: Option<Rat> = None;
        for f in &self.facets {
            let s = dot_ir(&f.normal, direction);
            if s.is_zero() {
                if f.offset.is_positive() {
                    return Ok(ScaleValue::Infinite);
                }
            } else if s.is_positive() {
                let bound = &f.offset / &s;
                if bound > lower {
                    lower = bound;
                }
            } else {
                let bound = &f.offset / &s;
                match &upper {
                    Some(u) if *u <= bound => {}
                    _ => upper = Some(bound),
                }
            }
        }
        if let Some(u) = upper {
            if u < lower {
                return Ok(ScaleValue::Infinite);
            }
        }
        Ok(ScaleValue::Finite(lower))
    }

    /// Integer scaling along an integer direction.
    pub fn axis_scale_lattice(&self, direction: &[i64]) -> Result<ScaleValue> {
        self.axis_scale(&to_rat_vec(direction))
    }

    /// The full face lattice (excluding the empty face), canonically ordered
    /// by ascending dimension and vertex set.
    pub fn faces(&self) -> Vec<Face> {
        let nv = self.vertices.len();
        let nr = self.rays.len();
        // Incidence of vertices and rays with facets.
        let mut facet_verts: Vec<BTreeSet<usize>> = Vec::with_capacity(self.facets.len());
        let mut facet_rays: Vec<BTreeSet<usize>> = Vec::with_capacity(self.facets.len());
        for f in &self.facets {
            facet_verts.push(
                (0..nv)
                    .filter(|&i| dot_ir(&f.normal, &self.vertices[i]) == f.offset)
                    .collect(),
            );
            facet_rays.push(
                (0..nr)
                    .filter(|&i| dot_ii(&f.normal, &self.rays[i]) == 0)
                    .collect(),
            );
        }
        let full: (BTreeSet<usize>, BTreeSet<usize>) =
            ((0..nv).collect(), (0..nr).collect());
        let mut seen: BTreeSet<(BTreeSet<usize>, BTreeSet<usize>)> = BTreeSet::new();
        seen.insert(full.clone());
        let mut queue = vec![full];
        while let Some((vs, rs)) = queue.pop() {
            for i in 0..self.facets.len() {
                let nvs: BTreeSet<usize> = vs.intersection(&facet_verts[i]).copied().collect();
                if nvs.is_empty() {
                    continue;
                }
                let nrs: BTreeSet<usize> = rs.intersection(&facet_rays[i]).copied().collect();
                let key = (nvs, nrs);
                if seen.insert(key.clone()) {
                    queue.push(key);
                }
            }
        }
        let mut out: Vec<Face> = seen
            .into_iter()
            .map(|(vs, rs)| {
                let defining: BTreeSet<usize> = (0..self.facets.len())
                    .filter(|&i| {
                        vs.is_subset(&facet_verts[i]) && rs.is_subset(&facet_rays[i])
                    })
                    .collect();
                let dim = self.face_dim(&vs, &rs);
                Face { vertex_ids: vs, ray_ids: rs, defining_facets: defining, dim }
            })
            .collect();
        out.sort_by(|a, b| {
            (a.dim, &a.vertex_ids, &a.ray_ids).cmp(&(b.dim, &b.vertex_ids, &b.ray_ids))
        });
        out
    }

    /// The compact faces: vertices, bounded edges, ..., in canonical order.
    pub fn compact_faces(&self) -> Vec<Face> {
        self.faces().into_iter().filter(Face::is_compact).collect()
    }

    fn face_dim(&self, vs: &BTreeSet<usize>, rs: &BTreeSet<usize>) -> usize {
        let mut ids = vs.iter();
        let first = *ids.next().expect("faces contain a vertex");
        let base = &self.vertices[first];
        let mut dirs: Vec<Vec<Rat>> = Vec::new();
        for &v in ids {
            dirs.push(
                self.vertices[v]
                    .iter()
                    .zip(base)
                    .map(|(a, b)| a - b)
                    .collect(),
            );
        }
        for &r in rs {
            dirs.push(to_rat_vec(&self.rays[r]));
        }
        lattice::rank_rational(&dirs)
    }

    /// Exact volume of `orthant \ P` for a polyhedron whose recession cone is
    /// the standard orthant.  Computed by coning the compact boundary faces
    /// to the origin and summing simplex determinants of a pulling
    /// triangulation.
    pub fn covolume(&self) -> Result<Rat> {
        let mut expected = standard_orthant_rays(self.dim);
        expected.sort();
        if self.rays != expected {
            return Err(Error::UnsupportedCone);
        }
        for i in 0..self.dim {
            let e: Vec<Rat> = (0..self.dim).map(|j| rat_int(i64::from(i == j))).collect();
            if matches!(self.axis_scale(&e)?, ScaleValue::Infinite) {
                return Err(Error::InfiniteCovolume);
            }
        }
        let faces = self.faces();
        let mut total = Rat::zero();
        for f in &faces {
            if !f.is_compact() || f.dim + 1 != self.dim {
                continue;
            }
            for simplex in pull_triangulation(f, &faces) {
                let rows: Vec<Vec<Rat>> =
                    simplex.iter().map(|&v| self.vertices[v].clone()).collect();
                total += lattice::det_rational(&rows).abs();
            }
        }
        Ok(total / crate::arith::factorial(self.dim))
    }
}

/// Triangulate a compact face by pulling its lexicographically least vertex.
/// Returns simplices as `(face.dim + 1)`-element vertex id lists.
fn pull_triangulation(face: &Face, all: &[Face]) -> Vec<Vec<usize>> {
    if face.dim == 0 {
        return vec![face.vertex_ids.iter().copied().collect()];
    }
    let apex = *face.vertex_ids.iter().next().expect("faces contain a vertex");
    let mut out = Vec::new();
    for g in all {
        if g.dim + 1 == face.dim
            && g.vertex_ids.is_subset(&face.vertex_ids)
            && g.ray_ids.is_subset(&face.ray_ids)
            && !g.vertex_ids.contains(&apex)
        {
            for mut simplex in pull_triangulation(g, all) {
                simplex.insert(0, apex);
                out.push(simplex);
            }
        }
    }
    out
}

fn lattice_form(f: &Facet) -> (Vec<i64>, i64) {
    let d = i64::try_from(f.offset.denom()).expect("facet denominator exceeds i64");
    let c = i64::try_from(f.offset.numer()).expect("facet offset exceeds i64");
    (f.normal.iter().map(|&x| x * d).collect(), c)
}

fn homogenize_facet(f: &Facet) -> Vec<i64> {
    let (n, c) = lattice_form(f);
    let mut row = Vec::with_capacity(n.len() + 1);
    row.push(-c);
    row.extend(n);
    row
}

pub(crate) struct DdResult {
    pub(crate) lines: Vec<Vec<i64>>,
    pub(crate) rays: Vec<Vec<i64>>,
}

/// Extreme rays (and lineality basis) of `{x : row . x >= 0 for all rows}`.
pub(crate) fn dd_cone(rows_in: &[Vec<i64>], dim: usize) -> DdResult {
    let rows: Vec<Vec<i64>> = rows_in
        .iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .cloned()
        .collect();
    let lines = lattice::kernel_basis(&rows, dim);
    if lines.is_empty() {
        return DdResult { lines, rays: dd_pointed(&rows, dim) };
    }
    // Quotient out the lineality space: substitute x = C^T z for a row space
    // basis C; the substituted system is pointed.
    let c = lattice::rowspace_basis(&rows);
    let s = c.len();
    let projected: Vec<Vec<i64>> = rows
        .iter()
        .map(|a| c.iter().map(|cj| dot_ii(a, cj)).collect())
        .collect();
    let zrays = dd_pointed(&projected, s);
    let rays = zrays
        .iter()
        .map(|z| {
            let mut x = vec![0i64; dim];
            for (zj, cj) in z.iter().zip(&c) {
                for k in 0..dim {
                    x[k] += zj * cj[k];
                }
            }
            primitive(&x)
        })
        .collect();
    DdResult { lines, rays }
}

/// Double description for a pointed cone (`ker(rows) = 0`).  Starts from a
/// simplicial subcone and inserts the remaining halfspaces one at a time,
/// maintaining the extreme ray list with the combinatorial adjacency test.
fn dd_pointed(rows: &[Vec<i64>], dim: usize) -> Vec<Vec<i64>> {
    if dim == 0 {
        return Vec::new();
    }
    // Greedily pick `dim` linearly independent rows for the initial cone.
    let mut chosen: Vec<usize> = Vec::new();
    let mut picked: Vec<Vec<i64>> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        if chosen.len() == dim {
            break;
        }
        picked.push(r.clone());
        if lattice::rank(&picked) == picked.len() {
            chosen.push(i);
        } else {
            picked.pop();
        }
    }
    assert_eq!(chosen.len(), dim, "pointed cone requires full-rank constraints");
    let basis: Vec<Vec<i64>> = chosen.iter().map(|&i| rows[i].clone()).collect();
    let mut rays: Vec<Vec<i64>> = (0..dim)
        .map(|k| {
            let e: Vec<Rat> = (0..dim).map(|j| rat_int(i64::from(j == k))).collect();
            let sol = lattice::solve_square(&basis, &e).expect("initial basis is invertible");
            primitive_of_rational(&sol)
        })
        .collect();

    let mut processed: Vec<usize> = chosen.clone();
    for t in 0..rows.len() {
        if chosen.contains(&t) {
            continue;
        }
        let row = &rows[t];
        let evals: Vec<i64> = rays.iter().map(|r| dot_ii(row, r)).collect();
        if evals.iter().all(|&e| e >= 0) {
            processed.push(t);
            continue;
        }
        // Zero sets over the processed rows, for the adjacency test.
        let zero_sets: Vec<BTreeSet<usize>> = rays
            .iter()
            .map(|r| {
                processed
                    .iter()
                    .copied()
                    .filter(|&i| dot_ii(&rows[i], r) == 0)
                    .collect()
            })
            .collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| evals[i] > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| evals[i] < 0).collect();
        let mut next: Vec<Vec<i64>> = (0..rays.len())
            .filter(|&i| evals[i] >= 0)
            .map(|i| rays[i].clone())
            .collect();
        for &p in &pos {
            for &m in &neg {
                let meet: BTreeSet<usize> =
                    zero_sets[p].intersection(&zero_sets[m]).copied().collect();
                let adjacent = (0..rays.len()).all(|r| {
                    r == p || r == m || !meet.is_subset(&zero_sets[r])
                });
                if !adjacent {
                    continue;
                }
                let combo: Vec<i64> = (0..dim)
                    .map(|j| evals[p] * rays[m][j] - evals[m] * rays[p][j])
                    .collect();
                next.push(primitive(&combo));
            }
        }
        next.sort();
        next.dedup();
        rays = next;
        processed.push(t);
    }
    debug_assert!(rays
        .iter()
        .all(|r| rows.iter().all(|row| dot_ii(row, r) >= 0)));
    let set: BTreeSet<Vec<i64>> = rays.into_iter().collect();
    set.into_iter().collect()
}
