use super::MeshError;

/// Integration weight attached to a 1D mesh.
///
/// `Radial` marks the mesh as the radial reduction of a disc: every integral
/// picks up the factor `r`, the left endpoint carries a natural boundary
/// condition and the right endpoint a homogeneous Dirichlet one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightKind {
    None,
    Radial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndpointBc {
    Dirichlet,
    Natural,
}

/// Partition of an interval `[a, b]` into elements with per-endpoint
/// boundary conditions.
#[derive(Debug, Clone)]
pub struct Mesh1d {
    nodes: Vec<f64>,
    weight: WeightKind,
    bc: [EndpointBc; 2],
}

impl Mesh1d {
    /// Uniform mesh of `[a, b]` with Dirichlet conditions at both endpoints.
    pub fn interval(a: f64, b: f64, n: usize) -> Result<Self, MeshError> {
        Self::with_bc(a, b, n, WeightKind::None, [EndpointBc::Dirichlet; 2])
    }

    /// Uniform radial mesh of `[0, radius]`: weight `r`, natural condition at
    /// the origin, Dirichlet at the rim.
    pub fn radial(n: usize, radius: f64) -> Result<Self, MeshError> {
        Self::with_bc(
            0.0,
            radius,
            n,
            WeightKind::Radial,
            [EndpointBc::Natural, EndpointBc::Dirichlet],
        )
    }

    fn with_bc(
        a: f64,
        b: f64,
        n: usize,
        weight: WeightKind,
        bc: [EndpointBc; 2],
    ) -> Result<Self, MeshError> {
        if n < 1 {
            return Err(MeshError::InvalidElementCount(n));
        }
        if !(a < b) || !a.is_finite() || !b.is_finite() {
            return Err(MeshError::InvalidInterval { a, b });
        }
        debug_assert!(weight != WeightKind::Radial || a == 0.0);
        let nodes = (0..=n)
            .map(|i| a + (b - a) * (i as f64) / (n as f64))
            .collect();
        Ok(Self { nodes, weight, bc })
    }

    pub fn node_coords(&self) -> &[f64] {
        &self.nodes
    }

    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn n_elements(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn weight_kind(&self) -> WeightKind {
        self.weight
    }

    pub fn boundary_conditions(&self) -> [EndpointBc; 2] {
        self.bc
    }

    pub fn start(&self) -> f64 {
        self.nodes[0]
    }

    pub fn end(&self) -> f64 {
        *self.nodes.last().unwrap()
    }

    /// Nodal values of `f` on this mesh.
    pub fn interpolate(&self, f: impl Fn(f64) -> f64) -> Vec<f64> {
        self.nodes.iter().map(|&x| f(x)).collect()
    }

    /// Distance from each node to the nearest Dirichlet endpoint.
    pub fn boundary_distance(&self) -> Vec<f64> {
        let (a, b) = (self.start(), self.end());
        self.nodes
            .iter()
            .map(|&x| {
                let mut d = f64::INFINITY;
                if self.bc[0] == EndpointBc::Dirichlet {
                    d = d.min(x - a);
                }
                if self.bc[1] == EndpointBc::Dirichlet {
                    d = d.min(b - x);
                }
                d
            })
            .collect()
    }
}

/// Equispaced mesh of `[a, b]` with `n` elements and Dirichlet endpoints.
pub fn generate_interval(a: f64, b: f64, n: usize) -> Result<Mesh1d, MeshError> {
    Mesh1d::interval(a, b, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_500_elements() {
        let mesh = generate_interval(0.0, 1.0, 500).unwrap();
        assert_eq!(mesh.n_nodes(), 501);
        assert_eq!(mesh.n_elements(), 500);
        for w in mesh.node_coords().windows(2) {
            assert!((w[1] - w[0] - 0.002).abs() < 1e-15);
        }
    }

    #[test]
    fn interval_single_element() {
        let mesh = generate_interval(0.0, 1.0, 1).unwrap();
        assert_eq!(mesh.node_coords(), &[0.0, 1.0]);
    }

    #[test]
    fn interval_four_elements() {
        let mesh = generate_interval(0.0, 2.0, 4).unwrap();
        assert_eq!(mesh.node_coords(), &[0.0, 0.5, 1.0, 1.5, 2.0]);
    }

    #[test]
    fn interval_rejects_bad_input() {
        assert!(matches!(
            generate_interval(0.0, 1.0, 0),
            Err(MeshError::InvalidElementCount(0))
        ));
        assert!(matches!(
            generate_interval(1.0, 1.0, 4),
            Err(MeshError::InvalidInterval { .. })
        ));
        assert!(matches!(
            generate_interval(2.0, 1.0, 4),
            Err(MeshError::InvalidInterval { .. })
        ));
    }

    #[test]
    fn radial_mesh_conventions() {
        let mesh = Mesh1d::radial(10, 1.0).unwrap();
        assert_eq!(mesh.start(), 0.0);
        assert_eq!(mesh.end(), 1.0);
        assert_eq!(mesh.weight_kind(), WeightKind::Radial);
        assert_eq!(
            mesh.boundary_conditions(),
            [EndpointBc::Natural, EndpointBc::Dirichlet]
        );
        let d = mesh.boundary_distance();
        assert_eq!(d[0], 1.0);
        assert_eq!(*d.last().unwrap(), 0.0);
    }
}
