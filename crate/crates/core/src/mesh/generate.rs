use super::{DomainKind, DomainSpec, Mesh2d, MeshError};

/// Structured triangulation of a rectangle, L-shape or isosceles triangle.
///
/// Rectangles and L-shapes are built from square cells of pitch at most
/// `spec.h`, each split along the lower-left to upper-right diagonal; the
/// split direction is fixed so repeated runs produce identical meshes.
/// The triangle domain is refined uniformly until the longest edge is at
/// most `spec.h`. Halving `h` exactly quadruples the triangle count for
/// all three kinds.
pub fn generate_structured_2d(spec: &DomainSpec) -> Result<Mesh2d, MeshError> {
    match spec.kind {
        DomainKind::Rectangle { width, height } => rectangle(width, height, spec.h),
        DomainKind::LShape { size, notch } => lshape(size, notch, spec.h),
        DomainKind::IsoscelesTriangle { base, altitude } => triangle(base, altitude, spec.h),
        DomainKind::Interval { .. } | DomainKind::DiscRadial { .. } => {
            Err(MeshError::NoGenerator("1d domain"))
        }
        DomainKind::ExternalFile { .. } => Err(MeshError::NoGenerator("external file")),
    }
}

fn check_h(h: f64, diameter: f64) -> Result<(), MeshError> {
    if h > diameter {
        return Err(MeshError::MeshSizeTooLarge { h, diameter });
    }
    Ok(())
}

fn cells_for(extent: f64, h: f64) -> usize {
    ((extent / h) - 1e-9).ceil().max(1.0) as usize
}

fn rectangle(width: f64, height: f64, h: f64) -> Result<Mesh2d, MeshError> {
    check_h(h, width.hypot(height))?;
    let nx = cells_for(width, h);
    let ny = cells_for(height, h);
    let node = |i: usize, j: usize| j * (nx + 1) + i;
    let mut nodes = Vec::with_capacity((nx + 1) * (ny + 1));
    for j in 0..=ny {
        for i in 0..=nx {
            nodes.push([
                width * (i as f64) / (nx as f64),
                height * (j as f64) / (ny as f64),
            ]);
        }
    }
    let mut triangles = Vec::with_capacity(2 * nx * ny);
    for j in 0..ny {
        for i in 0..nx {
            push_cell(&mut triangles, node(i, j), node(i + 1, j), node(i + 1, j + 1), node(i, j + 1));
        }
    }
    Mesh2d::new(nodes, triangles)
}

fn lshape(size: f64, notch: f64, h: f64) -> Result<Mesh2d, MeshError> {
    check_h(h, size * std::f64::consts::SQRT_2)?;
    let n = cells_for(size, h);
    let cell = size / (n as f64);
    // The notch corner must land on the grid, otherwise the polygon cannot
    // be represented exactly.
    let k = notch / cell;
    if (k - k.round()).abs() > 1e-9 {
        return Err(MeshError::IncompatibleResolution { h, notch });
    }
    let k = k.round() as usize;

    // Keep cells entirely inside (0,size)^2 \ [notch,size]^2.
    let mut node_id = vec![usize::MAX; (n + 1) * (n + 1)];
    let mut nodes = Vec::new();
    let mut id = |i: usize, j: usize, nodes: &mut Vec<[f64; 2]>| {
        let key = j * (n + 1) + i;
        if node_id[key] == usize::MAX {
            node_id[key] = nodes.len();
            nodes.push([cell * (i as f64), cell * (j as f64)]);
        }
        node_id[key]
    };
    let mut triangles = Vec::new();
    for j in 0..n {
        for i in 0..n {
            if i >= k && j >= k {
                continue;
            }
            let (a, b, c, d) = (
                id(i, j, &mut nodes),
                id(i + 1, j, &mut nodes),
                id(i + 1, j + 1, &mut nodes),
                id(i, j + 1, &mut nodes),
            );
            push_cell(&mut triangles, a, b, c, d);
        }
    }
    Mesh2d::new(nodes, triangles)
}

fn push_cell(triangles: &mut Vec<[usize; 3]>, a: usize, b: usize, c: usize, d: usize) {
    // a---b bottom, d---c top; diagonal a-c.
    triangles.push([a, b, c]);
    triangles.push([a, c, d]);
}

fn triangle(base: f64, altitude: f64, h: f64) -> Result<Mesh2d, MeshError> {
    let v = [[0.0, 0.0], [base, 0.0], [base / 2.0, altitude]];
    let leg = (base / 2.0).hypot(altitude);
    let longest = base.max(leg);
    check_h(h, longest)?;
    let m = ((longest / h).log2().ceil().max(0.0).exp2()) as usize;
    // Barycentric lattice: node (i, j) with i + j <= m.
    let idx = |i: usize, j: usize| -> usize {
        // row j has m + 1 - j entries
        let offset: usize = (0..j).map(|r| m + 1 - r).sum();
        offset + i
    };
    let mut nodes = Vec::with_capacity((m + 1) * (m + 2) / 2);
    for j in 0..=m {
        for i in 0..=(m - j) {
            let (s, t) = (i as f64 / m as f64, j as f64 / m as f64);
            nodes.push([
                v[0][0] + s * (v[1][0] - v[0][0]) + t * (v[2][0] - v[0][0]),
                v[0][1] + s * (v[1][1] - v[0][1]) + t * (v[2][1] - v[0][1]),
            ]);
        }
    }
    let mut triangles = Vec::with_capacity(m * m);
    for j in 0..m {
        for i in 0..(m - j) {
            triangles.push([idx(i, j), idx(i + 1, j), idx(i, j + 1)]);
            if i + 1 <= m - j - 1 {
                triangles.push([idx(i + 1, j), idx(i + 1, j + 1), idx(i, j + 1)]);
            }
        }
    }
    Mesh2d::new(nodes, triangles)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rect_spec(w: f64, h_dom: f64, h: f64) -> DomainSpec {
        DomainSpec::new(DomainKind::Rectangle { width: w, height: h_dom }, h).unwrap()
    }

    #[test]
    fn rectangle_2x2_h1() {
        let mesh = generate_structured_2d(&rect_spec(2.0, 2.0, 1.0)).unwrap();
        assert_eq!(mesh.n_triangles(), 8);
        assert_eq!(mesh.n_nodes(), 9);
    }

    #[test]
    fn lshape_h1_has_ten_triangles() {
        let spec = DomainSpec::new(DomainKind::LShape { size: 3.0, notch: 1.0 }, 1.0).unwrap();
        let mesh = generate_structured_2d(&spec).unwrap();
        assert_eq!(mesh.n_triangles(), 10);
    }

    #[test]
    fn structured_counts_at_h16() {
        // 32x32 cells split in two: the counts follow the generator exactly.
        let mesh = generate_structured_2d(&rect_spec(2.0, 2.0, 1.0 / 16.0)).unwrap();
        assert_eq!(mesh.n_triangles(), 2 * 32 * 32);
        assert_eq!(mesh.n_nodes(), 33 * 33);
    }

    #[test]
    fn refinement_quadruples_triangles() {
        for kind in [
            DomainKind::Rectangle { width: 2.0, height: 2.0 },
            DomainKind::LShape { size: 3.0, notch: 1.0 },
            DomainKind::IsoscelesTriangle { base: 1.0, altitude: 1.0 },
        ] {
            let mut h = 0.5;
            let mut prev = None;
            for _ in 0..3 {
                let spec = DomainSpec::new(kind.clone(), h).unwrap();
                let count = generate_structured_2d(&spec).unwrap().n_triangles();
                if let Some(p) = prev {
                    assert_eq!(count, 4 * p, "kind {kind:?} at h={h}");
                }
                prev = Some(count);
                h /= 2.0;
            }
        }
    }

    #[test]
    fn h_larger_than_diameter_rejected() {
        let spec = DomainSpec::new(DomainKind::Rectangle { width: 2.0, height: 2.0 }, 10.0).unwrap();
        assert!(matches!(
            generate_structured_2d(&spec),
            Err(MeshError::MeshSizeTooLarge { .. })
        ));
    }

    #[test]
    fn areas_match_geometry() {
        let mesh = generate_structured_2d(&rect_spec(1.0, 1.0, 0.25)).unwrap();
        assert!((mesh.area() - 1.0).abs() < 1e-12);
        let mesh = generate_structured_2d(&rect_spec(2.0, 2.0, 0.25)).unwrap();
        assert!((mesh.area() - 4.0).abs() < 1e-12);
        let spec = DomainSpec::new(DomainKind::LShape { size: 3.0, notch: 1.0 }, 0.25).unwrap();
        let mesh = generate_structured_2d(&spec).unwrap();
        assert!((mesh.area() - 5.0).abs() < 1e-12);
        let spec =
            DomainSpec::new(DomainKind::IsoscelesTriangle { base: 1.0, altitude: 1.0 }, 0.25)
                .unwrap();
        let mesh = generate_structured_2d(&spec).unwrap();
        assert!((mesh.area() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn inscribed_radii() {
        let mesh = generate_structured_2d(&rect_spec(1.0, 1.0, 0.125)).unwrap();
        assert!((mesh.inscribed_radius() - 0.5).abs() <= 0.125 * std::f64::consts::SQRT_2);
        let mesh = generate_structured_2d(&rect_spec(2.0, 2.0, 0.125)).unwrap();
        assert!((mesh.inscribed_radius() - 1.0).abs() <= 0.125 * std::f64::consts::SQRT_2);
        let spec = DomainSpec::new(DomainKind::LShape { size: 3.0, notch: 1.0 }, 0.125).unwrap();
        let mesh = generate_structured_2d(&spec).unwrap();
        assert!((mesh.inscribed_radius() - 0.5).abs() <= 0.125 * std::f64::consts::SQRT_2);
    }

    #[test]
    fn edge_census_is_conforming() {
        use std::collections::HashMap;
        let spec = DomainSpec::new(DomainKind::LShape { size: 3.0, notch: 1.0 }, 0.5).unwrap();
        let mesh = generate_structured_2d(&spec).unwrap();
        let mut count: HashMap<(usize, usize), usize> = HashMap::new();
        for tri in mesh.triangles() {
            for k in 0..3 {
                let (i, j) = (tri[k], tri[(k + 1) % 3]);
                *count.entry((i.min(j), i.max(j))).or_default() += 1;
            }
        }
        for (_, c) in count {
            assert!(c == 1 || c == 2);
        }
        assert_eq!(
            mesh.boundary_edges().len(),
            mesh.boundary_nodes().count(),
            "boundary edges form closed loops"
        );
    }
}
