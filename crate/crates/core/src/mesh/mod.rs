//! Geometric discretizations: 1D interval and radial meshes, 2D conforming
//! triangulations, structured generators for the benchmark domains, and a
//! plain-text mesh exchange format.

mod generate;
mod io;
mod one_d;
mod two_d;

pub use generate::generate_structured_2d;
pub use io::{read_mesh, write_mesh};
pub use one_d::{generate_interval, EndpointBc, Mesh1d, WeightKind};
pub use two_d::Mesh2d;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum MeshError {
    #[error("element count must be at least 1, got {0}")]
    InvalidElementCount(usize),
    #[error("invalid interval: left endpoint {a} must be below right endpoint {b}")]
    InvalidInterval { a: f64, b: f64 },
    #[error("target mesh size must be positive, got {0}")]
    InvalidMeshSize(f64),
    #[error("mesh size {h} exceeds the domain diameter {diameter}")]
    MeshSizeTooLarge { h: f64, diameter: f64 },
    #[error("domain parameter {name} must be positive, got {value}")]
    InvalidDomainParameter { name: &'static str, value: f64 },
    #[error("mesh size {h} does not align with the notch at {notch}")]
    IncompatibleResolution { h: f64, notch: f64 },
    #[error("domain kind {0} has no structured generator; load it from a file")]
    NoGenerator(&'static str),
    #[error("mesh has no nodes")]
    Empty,
    #[error("triangle {triangle} references node {index} out of range (node count {count})")]
    IndexOutOfRange {
        triangle: usize,
        index: usize,
        count: usize,
    },
    #[error("triangle {0} is degenerate (zero area)")]
    DegenerateTriangle(usize),
    #[error("edge ({0}, {1}) is shared by more than two triangles")]
    NonConformingEdge(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// Description of a computational domain together with a target mesh size.
#[derive(Debug, Clone, PartialEq)]
pub struct DomainSpec {
    pub kind: DomainKind,
    /// Target mesh size. For cell-based generators this is the grid pitch;
    /// the longest edge is the cell diagonal.
    pub h: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum DomainKind {
    Interval { a: f64, b: f64 },
    /// Unit-style disc handled through the 1D radial reduction.
    DiscRadial { radius: f64 },
    Rectangle { width: f64, height: f64 },
    /// Square (0, size)^2 with the closed square [notch, size]^2 removed.
    LShape { size: f64, notch: f64 },
    IsoscelesTriangle { base: f64, altitude: f64 },
    ExternalFile { path: std::path::PathBuf },
}

impl DomainSpec {
    pub fn new(kind: DomainKind, h: f64) -> Result<Self, MeshError> {
        if h <= 0.0 || !h.is_finite() {
            return Err(MeshError::InvalidMeshSize(h));
        }
        kind.check_parameters()?;
        Ok(Self { kind, h })
    }
}

impl DomainKind {
    fn check_parameters(&self) -> Result<(), MeshError> {
        let positive = |name: &'static str, value: f64| {
            if value > 0.0 && value.is_finite() {
                Ok(())
            } else {
                Err(MeshError::InvalidDomainParameter { name, value })
            }
        };
        match *self {
            DomainKind::Interval { a, b } => {
                if a >= b {
                    return Err(MeshError::InvalidInterval { a, b });
                }
                Ok(())
            }
            DomainKind::DiscRadial { radius } => positive("radius", radius),
            DomainKind::Rectangle { width, height } => {
                positive("width", width)?;
                positive("height", height)
            }
            DomainKind::LShape { size, notch } => {
                positive("size", size)?;
                positive("notch", notch)?;
                if notch >= size {
                    return Err(MeshError::InvalidDomainParameter {
                        name: "notch",
                        value: notch,
                    });
                }
                Ok(())
            }
            DomainKind::IsoscelesTriangle { base, altitude } => {
                positive("base", base)?;
                positive("altitude", altitude)
            }
            DomainKind::ExternalFile { .. } => Ok(()),
        }
    }
}
