//! Proper reference frame of an observer fixed to the surface of the rotating
//! mass: the measured acceleration, the measured rotation rate with its
//! physical decomposition, and the local metric perturbation.
//!
//! The local triad is right-handed with ẑ along the outward radial direction,
//! ŷ horizontal in the meridian plane pointing toward the equator, and
//! x̂ = ŷ × ẑ completing the triad (x̂ points west). The colatitude is the
//! polar angle measured from the rotation axis.

use nalgebra::{Matrix4, Vector3};

use crate::earth::{gravitomagnetic_curl, newtonian_potential_dimensionless, EarthModel};
use crate::error::{Error, Result};

fn check_colatitude(colatitude: f64) -> Result<()> {
    if !(0.0..=std::f64::consts::PI).contains(&colatitude) || !colatitude.is_finite() {
        return Err(Error::domain(format!(
            "colatitude must lie in [0, pi], got {colatitude}"
        )));
    }
    Ok(())
}

/// Measured rotation rate of the surface-fixed triad relative to local
/// inertial frames, split into its physical contributions (rad/s, local triad).
///
/// The sign convention of the three relativistic terms is fixed so that
/// 4 total·A/c^2 reproduces the closed-form counter-propagation delay of
/// [`crate::eikonal::sagnac_gr_delay`]; each term keeps its textbook magnitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationDecomposition {
    /// Spin of the source as measured on its surface, including the
    /// O(v^2/c^2 + U/c^2) relativistic correction factor.
    pub earth_spin: Vector3<f64>,
    /// Kinematic (Thomas) term, gravitational piece only; the centrifugal
    /// piece is ~1000x smaller and dropped.
    pub thomas: Vector3<f64>,
    /// Geodetic (de Sitter) term from motion through the curved background.
    pub geodetic: Vector3<f64>,
    /// Frame-dragging term from the source's spin angular momentum.
    pub lense_thirring: Vector3<f64>,
    /// Componentwise sum of the four terms.
    pub total: Vector3<f64>,
}

/// Observer frame at a given colatitude: measured acceleration, measured
/// rotation, and the model constants. Immutable and freely shareable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalFrame {
    /// Polar angle from the rotation axis (rad).
    pub colatitude: f64,
    /// Measured proper acceleration in the local triad (m/s^2).
    pub accel: Vector3<f64>,
    /// Measured rotation rate and its decomposition.
    pub rotation: RotationDecomposition,
    /// Source model.
    pub model: EarthModel,
}

impl LocalFrame {
    pub fn new(model: &EarthModel, colatitude: f64) -> Result<Self> {
        Ok(LocalFrame {
            colatitude,
            accel: proper_acceleration(model, colatitude)?,
            rotation: proper_rotation_rate(model, colatitude)?,
            model: *model,
        })
    }

    /// Observer position in earth-centered coordinates (polar axis along z,
    /// observer at longitude zero).
    pub fn position_earth(&self) -> Vector3<f64> {
        let (s, c) = self.colatitude.sin_cos();
        self.model.radius * Vector3::new(s, 0.0, c)
    }

    /// Express an earth-centered vector in the local triad (x̂, ŷ, ẑ).
    pub fn to_local(&self, v: &Vector3<f64>) -> Vector3<f64> {
        let (s, c) = self.colatitude.sin_cos();
        let e_r = Vector3::new(s, 0.0, c);
        let e_theta = Vector3::new(c, 0.0, -s);
        let e_phi = Vector3::new(0.0, 1.0, 0.0);
        Vector3::new(-v.dot(&e_phi), v.dot(&e_theta), v.dot(&e_r))
    }

    /// The pure-gravity part of the measured acceleration, magnitude g along ẑ.
    pub fn gravity_part(&self) -> Vector3<f64> {
        Vector3::new(0.0, 0.0, self.model.surface_gravity)
    }

    /// The outward centrifugal acceleration at this colatitude.
    pub fn centrifugal_part(&self) -> Vector3<f64> {
        centrifugal_acceleration(&self.model, self.colatitude)
            .expect("colatitude was validated at construction")
    }
}

/// Outward centrifugal acceleration omega^2 R sin(theta) (sin(theta) ẑ + cos(theta) ŷ).
pub fn centrifugal_acceleration(model: &EarthModel, colatitude: f64) -> Result<Vector3<f64>> {
    check_colatitude(colatitude)?;
    let (s, c) = colatitude.sin_cos();
    let w2r = model.spin_rate * model.spin_rate * model.radius;
    Ok(w2r * s * Vector3::new(0.0, c, s))
}

/// Measured proper acceleration of the surface-fixed observer in the local
/// triad: gravity minus the outward centrifugal acceleration,
/// (g − omega^2 R sin^2θ) ẑ − omega^2 R sinθ cosθ ŷ.
///
/// A plumb line hangs along −γ̂.
pub fn proper_acceleration(model: &EarthModel, colatitude: f64) -> Result<Vector3<f64>> {
    let centrifugal = centrifugal_acceleration(model, colatitude)?;
    Ok(Vector3::new(0.0, 0.0, model.surface_gravity) - centrifugal)
}

/// Evaluates the measured rotation rate and its four-term decomposition at
/// the given colatitude, with v = omega x R the observer's coordinate velocity.
pub fn proper_rotation_rate(model: &EarthModel, colatitude: f64) -> Result<RotationDecomposition> {
    check_colatitude(colatitude)?;
    let (s, c) = colatitude.sin_cos();
    let c2 = model.light_speed * model.light_speed;

    // local triad: spin axis = cosθ ẑ − sinθ ŷ; velocity points east = −x̂
    let spin_axis = Vector3::new(0.0, -s, c);
    let speed = model.spin_rate * model.radius * s;
    let velocity = Vector3::new(-speed, 0.0, 0.0);

    let u_over_c2 = newtonian_potential_dimensionless(model, model.radius)?;
    let correction = 1.0 + 0.5 * speed * speed / c2 + u_over_c2;
    let earth_spin = model.spin_rate * correction * spin_axis;

    // Newtonian gravity enters the velocity-dependent terms; grad U = −g_N ẑ.
    let g_newton = model.newtonian_surface_gravity();
    let grad_u = Vector3::new(0.0, 0.0, -g_newton);
    let thomas = -0.5 * velocity.cross(&(-grad_u)) / c2;
    let geodetic = 1.5 * velocity.cross(&grad_u) / c2;

    let frame = LocalFrame {
        colatitude,
        accel: Vector3::zeros(),
        rotation: RotationDecomposition {
            earth_spin: Vector3::zeros(),
            thomas: Vector3::zeros(),
            geodetic: Vector3::zeros(),
            lense_thirring: Vector3::zeros(),
            total: Vector3::zeros(),
        },
        model: *model,
    };
    let curl_earth = gravitomagnetic_curl(model, &frame.position_earth())?;
    let lense_thirring = 2.0 * model.grav_const * frame.to_local(&curl_earth) / c2;

    let total = earth_spin + thomas + geodetic + lense_thirring;
    Ok(RotationDecomposition {
        earth_spin,
        thomas,
        geodetic,
        lense_thirring,
        total,
    })
}

/// Metric perturbation of the accelerating, rotating proper frame:
/// h_00 = −2 γ·x/c^2, h_0i = (ω′ × x)_i / c, h_ij = 0, with x the local
/// position (coordinates x^0 = ct, x). Vanishes on the observer world-line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricPerturbation {
    /// Measured acceleration γ (m/s^2).
    pub accel: Vector3<f64>,
    /// Measured rotation rate ω′ (rad/s).
    pub rotation: Vector3<f64>,
    /// Speed of light (m/s).
    pub light_speed: f64,
}

impl MetricPerturbation {
    /// Metric of the observer's frame (γ and the total ω′ of the decomposition).
    pub fn from_frame(frame: &LocalFrame) -> Self {
        MetricPerturbation {
            accel: frame.accel,
            rotation: frame.rotation.total,
            light_speed: frame.model.light_speed,
        }
    }

    /// Metric with explicitly chosen γ and ω′ (used for single-effect studies).
    pub fn uniform(accel: Vector3<f64>, rotation: Vector3<f64>, light_speed: f64) -> Self {
        MetricPerturbation {
            accel,
            rotation,
            light_speed,
        }
    }

    /// h_00 at local position `x`.
    pub fn h00(&self, x: &Vector3<f64>) -> f64 {
        -2.0 * self.accel.dot(x) / (self.light_speed * self.light_speed)
    }

    /// The vector of off-diagonal components h_0i at local position `x`.
    pub fn h0(&self, x: &Vector3<f64>) -> Vector3<f64> {
        self.rotation.cross(x) / self.light_speed
    }

    /// Full symmetric 4x4 perturbation at local position `x`,
    /// indices ordered (t, x, y, z).
    pub fn evaluate(&self, x: &Vector3<f64>) -> Matrix4<f64> {
        let h00 = self.h00(x);
        let h0 = self.h0(x);
        let mut h = Matrix4::zeros();
        h[(0, 0)] = h00;
        for i in 0..3 {
            h[(0, i + 1)] = h0[i];
            h[(i + 1, 0)] = h0[i];
        }
        h
    }
}

/// Metric perturbation evaluator for the given frame.
pub fn local_metric(frame: &LocalFrame) -> MetricPerturbation {
    MetricPerturbation::from_frame(frame)
}
