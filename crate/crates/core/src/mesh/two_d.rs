use std::collections::HashMap;

use super::MeshError;

/// Conforming triangulation of a planar domain.
///
/// Triangles are stored with positive orientation (counter-clockwise).
/// Boundary nodes are the endpoints of edges that belong to exactly one
/// triangle; they are always recomputed from connectivity.
#[derive(Debug, Clone)]
pub struct Mesh2d {
    nodes: Vec<[f64; 2]>,
    triangles: Vec<[usize; 3]>,
    boundary_edges: Vec<[usize; 2]>,
    is_boundary: Vec<bool>,
}

impl Mesh2d {
    /// Builds a mesh from raw node/connectivity data.
    ///
    /// Negatively oriented triangles are flipped. Rejects out-of-range
    /// indices, zero-area triangles and edges shared by more than two
    /// triangles.
    pub fn new(nodes: Vec<[f64; 2]>, mut triangles: Vec<[usize; 3]>) -> Result<Self, MeshError> {
        if nodes.is_empty() {
            return Err(MeshError::Empty);
        }
        let n = nodes.len();
        for (t, tri) in triangles.iter_mut().enumerate() {
            for &i in tri.iter() {
                if i >= n {
                    return Err(MeshError::IndexOutOfRange {
                        triangle: t,
                        index: i,
                        count: n,
                    });
                }
            }
            let a = signed_area(&nodes, *tri);
            if a == 0.0 || !a.is_finite() {
                return Err(MeshError::DegenerateTriangle(t));
            }
            if a < 0.0 {
                tri.swap(1, 2);
            }
        }

        // Edge census: interior edges appear twice, boundary edges once.
        let mut edge_count: HashMap<(usize, usize), u8> = HashMap::new();
        for tri in &triangles {
            for k in 0..3 {
                let (i, j) = (tri[k], tri[(k + 1) % 3]);
                let key = (i.min(j), i.max(j));
                let c = edge_count.entry(key).or_insert(0);
                *c += 1;
                if *c > 2 {
                    return Err(MeshError::NonConformingEdge(key.0, key.1));
                }
            }
        }
        let mut boundary_edges: Vec<[usize; 2]> = edge_count
            .iter()
            .filter(|&(_, &c)| c == 1)
            .map(|(&(i, j), _)| [i, j])
            .collect();
        boundary_edges.sort_unstable();
        let mut is_boundary = vec![false; n];
        for e in &boundary_edges {
            is_boundary[e[0]] = true;
            is_boundary[e[1]] = true;
        }

        Ok(Self {
            nodes,
            triangles,
            boundary_edges,
            is_boundary,
        })
    }

    pub fn nodes(&self) -> &[[f64; 2]] {
        &self.nodes
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn n_triangles(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_boundary_node(&self, i: usize) -> bool {
        self.is_boundary[i]
    }

    pub fn boundary_nodes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(move |&i| self.is_boundary[i])
    }

    pub fn boundary_edges(&self) -> &[[usize; 2]] {
        &self.boundary_edges
    }

    pub fn triangle_area(&self, t: usize) -> f64 {
        signed_area(&self.nodes, self.triangles[t])
    }

    /// Total area, the sum of (positive) triangle areas.
    pub fn area(&self) -> f64 {
        (0..self.triangles.len())
            .map(|t| self.triangle_area(t))
            .sum()
    }

    /// Length of the longest edge.
    pub fn max_edge_length(&self) -> f64 {
        let mut h = 0.0f64;
        for tri in &self.triangles {
            for k in 0..3 {
                let a = self.nodes[tri[k]];
                let b = self.nodes[tri[(k + 1) % 3]];
                h = h.max((a[0] - b[0]).hypot(a[1] - b[1]));
            }
        }
        h
    }

    /// Distance from a point to the boundary polyline.
    pub fn boundary_distance(&self, p: [f64; 2]) -> f64 {
        let mut d = f64::INFINITY;
        for e in &self.boundary_edges {
            d = d.min(point_segment_distance(p, self.nodes[e[0]], self.nodes[e[1]]));
        }
        d
    }

    /// Distance from every node to the boundary polyline.
    pub fn node_boundary_distances(&self) -> Vec<f64> {
        self.nodes
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                if self.is_boundary[i] {
                    0.0
                } else {
                    self.boundary_distance(p)
                }
            })
            .collect()
    }

    /// Radius of the largest disc inscribed in the meshed domain.
    ///
    /// Sampled distance field: evaluates the boundary distance at interior
    /// nodes and triangle barycenters, then refines around the best sample
    /// with a shrinking compass search restricted to the domain. Accuracy is
    /// O(h) with h the mesh size.
    pub fn inscribed_radius(&self) -> f64 {
        let mut best_p = [0.0, 0.0];
        let mut best_d = 0.0f64;
        for (i, &p) in self.nodes.iter().enumerate() {
            if self.is_boundary[i] {
                continue;
            }
            let d = self.boundary_distance(p);
            if d > best_d {
                best_d = d;
                best_p = p;
            }
        }
        for tri in &self.triangles {
            let p = barycenter(&self.nodes, *tri);
            let d = self.boundary_distance(p);
            if d > best_d {
                best_d = d;
                best_p = p;
            }
        }
        // Compass refinement around the best sample.
        let mut step = self.max_edge_length();
        let dirs = [
            [1.0, 0.0],
            [-1.0, 0.0],
            [0.0, 1.0],
            [0.0, -1.0],
            [0.7071067811865476, 0.7071067811865476],
            [-0.7071067811865476, 0.7071067811865476],
            [0.7071067811865476, -0.7071067811865476],
            [-0.7071067811865476, -0.7071067811865476],
        ];
        for _ in 0..60 {
            let mut moved = false;
            for d in dirs {
                let q = [best_p[0] + step * d[0], best_p[1] + step * d[1]];
                if !self.contains(q) {
                    continue;
                }
                let dist = self.boundary_distance(q);
                if dist > best_d {
                    best_d = dist;
                    best_p = q;
                    moved = true;
                }
            }
            if !moved {
                step *= 0.5;
                if step < 1e-12 {
                    break;
                }
            }
        }
        best_d
    }

    /// Point-in-domain test by scanning triangles.
    pub fn contains(&self, p: [f64; 2]) -> bool {
        self.triangles
            .iter()
            .any(|&tri| point_in_triangle(p, self.nodes[tri[0]], self.nodes[tri[1]], self.nodes[tri[2]]))
    }

    /// Nodal values of `f` on this mesh.
    pub fn interpolate(&self, f: impl Fn(f64, f64) -> f64) -> Vec<f64> {
        self.nodes.iter().map(|&[x, y]| f(x, y)).collect()
    }
}

fn signed_area(nodes: &[[f64; 2]], tri: [usize; 3]) -> f64 {
    let [a, b, c] = [nodes[tri[0]], nodes[tri[1]], nodes[tri[2]]];
    0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]))
}

fn barycenter(nodes: &[[f64; 2]], tri: [usize; 3]) -> [f64; 2] {
    let [a, b, c] = [nodes[tri[0]], nodes[tri[1]], nodes[tri[2]]];
    [
        (a[0] + b[0] + c[0]) / 3.0,
        (a[1] + b[1] + c[1]) / 3.0,
    ]
}

fn point_segment_distance(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    let ab = [b[0] - a[0], b[1] - a[1]];
    let ap = [p[0] - a[0], p[1] - a[1]];
    let len2 = ab[0] * ab[0] + ab[1] * ab[1];
    let t = if len2 > 0.0 {
        ((ap[0] * ab[0] + ap[1] * ab[1]) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let q = [a[0] + t * ab[0], a[1] + t * ab[1]];
    (p[0] - q[0]).hypot(p[1] - q[1])
}

fn point_in_triangle(p: [f64; 2], a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> bool {
    let cross = |u: [f64; 2], v: [f64; 2], w: [f64; 2]| {
        (v[0] - u[0]) * (w[1] - u[1]) - (w[0] - u[0]) * (v[1] - u[1])
    };
    let d1 = cross(a, b, p);
    let d2 = cross(b, c, p);
    let d3 = cross(c, a, p);
    let tol = -1e-12;
    d1 >= tol && d2 >= tol && d3 >= tol
}
