//! Interferometer paths in the local frame: oriented polylines, common-path
//! loops with exact areal vectors, and the dual-arm parallelogram.
//!
//! Local coordinates are meters in the observer triad. Paths must stay small
//! compared to the metric variation scale c^2/g; a conservative gate of
//! 1e5 m on every coordinate is enforced at construction.

use nalgebra::Vector3;

use crate::error::{Error, Result};

/// Largest allowed coordinate magnitude (m) for any path vertex.
pub const MAX_EXTENT: f64 = 1e5;

/// Oriented piecewise-straight path. When `closed`, the segment from the last
/// vertex back to the first is implied (the first vertex is not repeated).
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    vertices: Vec<Vector3<f64>>,
    closed: bool,
}

impl Polyline {
    /// Validates and builds a path: at least 2 vertices (3 if closed), all
    /// consecutive vertices distinct (including the closing pair), every
    /// coordinate finite and within [`MAX_EXTENT`].
    pub fn new(vertices: Vec<Vector3<f64>>, closed: bool) -> Result<Self> {
        let min = if closed { 3 } else { 2 };
        if vertices.len() < min {
            return Err(Error::domain(format!(
                "path needs at least {min} vertices, got {}",
                vertices.len()
            )));
        }
        for v in &vertices {
            if !v.iter().all(|c| c.is_finite() && c.abs() < MAX_EXTENT) {
                return Err(Error::domain(format!(
                    "vertex {v:?} leaves the local-frame validity region (|x| < {MAX_EXTENT} m)"
                )));
            }
        }
        let n = vertices.len();
        let pairs = if closed { n } else { n - 1 };
        for i in 0..pairs {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            if a == b {
                return Err(Error::domain(format!("degenerate segment at vertex {i}")));
            }
        }
        Ok(Polyline { vertices, closed })
    }

    /// Open path through the given vertices.
    pub fn open(vertices: Vec<Vector3<f64>>) -> Result<Self> {
        Polyline::new(vertices, false)
    }

    /// Closed loop through the given vertices.
    pub fn closed(vertices: Vec<Vector3<f64>>) -> Result<Self> {
        Polyline::new(vertices, true)
    }

    /// Regular polygon inscribed in the circle of the given circumradius,
    /// centered on the origin, lying in the plane whose normal is the areal
    /// direction at tilt angle `tilt` (cos(tilt) ẑ − sin(tilt) ŷ). Vertices
    /// are ordered counterclockwise about that normal.
    pub fn regular_polygon(circumradius: f64, segments: usize, tilt: f64) -> Result<Self> {
        if !(circumradius > 0.0) || !circumradius.is_finite() {
            return Err(Error::domain(format!(
                "circumradius must be positive, got {circumradius}"
            )));
        }
        if segments < 3 {
            return Err(Error::domain(format!(
                "a polygon needs at least 3 segments, got {segments}"
            )));
        }
        let normal = areal_direction(tilt);
        let u = Vector3::new(1.0, 0.0, 0.0);
        let w = normal.cross(&u);
        let vertices = (0..segments)
            .map(|k| {
                let phi = 2.0 * std::f64::consts::PI * k as f64 / segments as f64;
                circumradius * (phi.cos() * u + phi.sin() * w)
            })
            .collect();
        Polyline::new(vertices, true)
    }

    pub fn vertices(&self) -> &[Vector3<f64>] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Ordered directed segments (a, b), including the closing segment of a loop.
    pub fn segments(&self) -> impl Iterator<Item = (Vector3<f64>, Vector3<f64>)> + '_ {
        let n = self.vertices.len();
        let count = if self.closed { n } else { n - 1 };
        (0..count).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Total path length (m).
    pub fn length(&self) -> f64 {
        self.segments().map(|(a, b)| (b - a).norm()).sum()
    }

    /// Same path traversed in the opposite order.
    pub fn reversed(&self) -> Polyline {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Polyline {
            vertices,
            closed: self.closed,
        }
    }

    /// Shoelace areal vector of a closed loop, (1/2) sum v_i x v_{i+1}.
    /// Oriented by the traversal direction (right-hand rule).
    pub fn areal_vector(&self) -> Result<Vector3<f64>> {
        if !self.closed {
            return Err(Error::OpenPath);
        }
        let n = self.vertices.len();
        let mut sum = Vector3::zeros();
        for i in 0..n {
            sum += self.vertices[i].cross(&self.vertices[(i + 1) % n]);
        }
        Ok(0.5 * sum)
    }
}

/// Unit areal direction at tilt `alpha` from the local vertical:
/// cos(alpha) ẑ − sin(alpha) ŷ, i.e. tilted from the zenith toward the pole.
pub fn areal_direction(alpha: f64) -> Vector3<f64> {
    let (s, c) = alpha.sin_cos();
    Vector3::new(0.0, -s, c)
}

/// Closed common-path loop with area `area`, areal vector tilted by `tilt`
/// from the local vertical, realized as a regular polygon whose enclosed
/// (shoelace) area equals `area` exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct CommonPathLoop {
    /// Enclosed area (m^2).
    pub area: f64,
    /// Tilt of the areal vector from the local vertical (rad).
    pub tilt: f64,
    /// Areal vector, area * areal_direction(tilt) (m^2).
    pub areal_vector: Vector3<f64>,
    /// Polygon realizing the loop, counterclockwise about the areal vector.
    pub path: Polyline,
}

/// Builds a [`CommonPathLoop`]. The polygon circumradius is chosen so the
/// polygon area equals the requested area (a circle-inscribed polygon of the
/// same nominal area would fall short by O(1/segments^2)).
pub fn make_loop(area: f64, tilt: f64, segments: usize) -> Result<CommonPathLoop> {
    if !(area > 0.0) || !area.is_finite() {
        return Err(Error::domain(format!("loop area must be positive, got {area}")));
    }
    let n = segments as f64;
    let circumradius = (2.0 * area / (n * (2.0 * std::f64::consts::PI / n).sin())).sqrt();
    let path = Polyline::regular_polygon(circumradius, segments, tilt)?;
    Ok(CommonPathLoop {
        area,
        tilt,
        areal_vector: area * areal_direction(tilt),
        path,
    })
}

/// Effective enclosed area of a wound fiber loop: length * radius / 2.
pub fn fiber_loop_area(fiber_length: f64, loop_radius: f64) -> Result<f64> {
    if !(fiber_length > 0.0) || !(loop_radius > 0.0) {
        return Err(Error::domain(format!(
            "fiber length and loop radius must be positive, got {fiber_length}, {loop_radius}"
        )));
    }
    Ok(fiber_length * loop_radius / 2.0)
}

/// Direction of the short arms (BA and CD) for tilts `alpha`, `beta`.
pub fn short_arm_direction(alpha: f64, beta: f64) -> Vector3<f64> {
    let (sa, ca) = alpha.sin_cos();
    let (sb, cb) = beta.sin_cos();
    Vector3::new(sa * sb, ca, sa * cb)
}

/// Direction of the long arms (DA and CB) for tilts `alpha`, `beta`.
pub fn long_arm_direction(alpha: f64, beta: f64) -> Vector3<f64> {
    let (sa, ca) = alpha.sin_cos();
    let (sb, cb) = beta.sin_cos();
    Vector3::new(ca * sb, -sa, ca * cb)
}

/// Dual-arm parallelogram ABCD: source or detector at A (origin) and C, with
/// B = A + d n̂_short and D = A + l n̂_long. The two photon paths are A→B→C
/// and C→D→A.
#[derive(Debug, Clone, PartialEq)]
pub struct DualArmGeometry {
    /// Long arm length l (m).
    pub long_arm: f64,
    /// Short arm length d (m).
    pub short_arm: f64,
    /// Orientation angle alpha (rad).
    pub tilt_alpha: f64,
    /// Orientation angle beta (rad).
    pub tilt_beta: f64,
    pub corner_a: Vector3<f64>,
    pub corner_b: Vector3<f64>,
    pub corner_c: Vector3<f64>,
    pub corner_d: Vector3<f64>,
    /// Path A→B→C.
    pub path_abc: Polyline,
    /// Path C→D→A.
    pub path_cda: Polyline,
}

impl DualArmGeometry {
    /// Enclosed parallelogram area l*d (m^2).
    pub fn area(&self) -> f64 {
        self.long_arm * self.short_arm
    }
}

/// Builds the dual-arm parallelogram for arm lengths `l` (long) and `d`
/// (short) at orientation (`alpha`, `beta`).
pub fn make_dual_arm(l: f64, d: f64, alpha: f64, beta: f64) -> Result<DualArmGeometry> {
    if !(l > 0.0) || !(d > 0.0) || !l.is_finite() || !d.is_finite() {
        return Err(Error::domain(format!(
            "arm lengths must be positive, got l = {l}, d = {d}"
        )));
    }
    if !alpha.is_finite() || !beta.is_finite() {
        return Err(Error::domain("orientation angles must be finite"));
    }
    let a = Vector3::zeros();
    let b = d * short_arm_direction(alpha, beta);
    let dd = l * long_arm_direction(alpha, beta);
    let c = b + dd;
    let path_abc = Polyline::open(vec![a, b, c])?;
    let path_cda = Polyline::open(vec![c, dd, a])?;
    Ok(DualArmGeometry {
        long_arm: l,
        short_arm: d,
        tilt_alpha: alpha,
        tilt_beta: beta,
        corner_a: a,
        corner_b: b,
        corner_c: c,
        corner_d: dd,
        path_abc,
        path_cda,
    })
}
