//! Physical constants and potentials of the rotating spherical mass that
//! sources every relativistic effect downstream.
//!
//! All quantities are SI. Factors of `c` are restored explicitly wherever a
//! dimensionless (metric) version of a potential is needed.

use nalgebra::Vector3;

use crate::error::{Error, Result};

/// Rotating solid sphere: gravitational constant, mass, radius, moment of
/// inertia, spin rate, surface gravity, and the speed of light.
///
/// Immutable after construction; all invariants are checked by [`EarthModel::new`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EarthModel {
    /// Gravitational constant (m^3 kg^-1 s^-2).
    pub grav_const: f64,
    /// Mass (kg).
    pub mass: f64,
    /// Radius (m).
    pub radius: f64,
    /// Moment of inertia about the polar axis (kg m^2).
    pub moment_of_inertia: f64,
    /// Spin rate about the polar axis (rad/s).
    pub spin_rate: f64,
    /// Measured gravitational acceleration at the surface (m/s^2).
    pub surface_gravity: f64,
    /// Speed of light (m/s).
    pub light_speed: f64,
}

impl EarthModel {
    /// Builds a model and validates its invariants: strictly positive fields,
    /// a weak field (r_S/R < 1e-6), and a moment of inertia no larger than
    /// the solid-sphere bound (2/5)MR^2 (with 1% tolerance).
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        grav_const: f64,
        mass: f64,
        radius: f64,
        moment_of_inertia: f64,
        spin_rate: f64,
        surface_gravity: f64,
        light_speed: f64,
    ) -> Result<Self> {
        let model = EarthModel {
            grav_const,
            mass,
            radius,
            moment_of_inertia,
            spin_rate,
            surface_gravity,
            light_speed,
        };
        let fields = [
            ("grav_const", grav_const),
            ("mass", mass),
            ("radius", radius),
            ("moment_of_inertia", moment_of_inertia),
            ("spin_rate", spin_rate),
            ("surface_gravity", surface_gravity),
            ("light_speed", light_speed),
        ];
        for (name, value) in fields {
            if !(value > 0.0) || !value.is_finite() {
                return Err(Error::domain(format!(
                    "{name} must be strictly positive and finite, got {value}"
                )));
            }
        }
        let weakness = model.schwarzschild_radius() / radius;
        if weakness >= 1e-6 {
            return Err(Error::domain(format!(
                "source is not weak-field: r_S/R = {weakness:e} >= 1e-6"
            )));
        }
        let solid_sphere_bound = 0.4 * mass * radius * radius * 1.01;
        if moment_of_inertia >= solid_sphere_bound {
            return Err(Error::domain(format!(
                "moment of inertia {moment_of_inertia:e} exceeds the solid-sphere bound {solid_sphere_bound:e}"
            )));
        }
        Ok(model)
    }

    /// Schwarzschild radius 2GM/c^2 (m).
    pub fn schwarzschild_radius(&self) -> f64 {
        2.0 * self.grav_const * self.mass / (self.light_speed * self.light_speed)
    }

    /// Spin angular momentum J = I omega (kg m^2/s), directed along the polar axis.
    pub fn angular_momentum(&self) -> f64 {
        self.moment_of_inertia * self.spin_rate
    }

    /// Newtonian surface gravity GM/R^2 (m/s^2). Differs from the measured
    /// `surface_gravity` (9.8 for the default model) at the 0.2% level.
    pub fn newtonian_surface_gravity(&self) -> f64 {
        self.grav_const * self.mass / (self.radius * self.radius)
    }
}

/// Canonical constant set: G = 6.674e-11, M = 5.972e24 kg, R = 6.371e6 m,
/// omega = 7.2921e-5 rad/s, g = 9.8 m/s^2, I = 0.3307 MR^2, c = 2.99792458e8 m/s.
pub fn default_earth() -> EarthModel {
    let mass = 5.972e24;
    let radius = 6.371e6;
    EarthModel::new(
        6.674e-11,
        mass,
        radius,
        0.3307 * mass * radius * radius,
        7.2921e-5,
        9.8,
        2.99792458e8,
    )
    .expect("default constants satisfy the model invariants")
}

/// Newtonian potential U(r) = GM/r (m^2/s^2) at radial distance `r`.
pub fn newtonian_potential(model: &EarthModel, r: f64) -> Result<f64> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::domain(format!("radius must be positive, got {r}")));
    }
    Ok(model.grav_const * model.mass / r)
}

/// Dimensionless potential U(r)/c^2, the quantity that enters the metric.
pub fn newtonian_potential_dimensionless(model: &EarthModel, r: f64) -> Result<f64> {
    Ok(newtonian_potential(model, r)? / (model.light_speed * model.light_speed))
}

/// Gravitomagnetic potential (J x r)/(2 r^3) at `position` in earth-centered
/// coordinates with the polar axis along z.
///
/// The dimensionless metric potential is G times this over c^3; the factor G
/// is restored by the consumer (the Lense-Thirring term uses 2G curl(V)/c^2).
pub fn gravitomagnetic_potential(model: &EarthModel, position: &Vector3<f64>) -> Result<Vector3<f64>> {
    let r = position.norm();
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::domain("position must be a nonzero finite vector"));
    }
    let j = Vector3::new(0.0, 0.0, model.angular_momentum());
    Ok(j.cross(position) / (2.0 * r.powi(3)))
}

/// Analytic curl of [`gravitomagnetic_potential`] at `position`:
/// curl V = [3 (J.r̂) r̂ − J] / (2 r^3).
pub fn gravitomagnetic_curl(model: &EarthModel, position: &Vector3<f64>) -> Result<Vector3<f64>> {
    let r = position.norm();
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::domain("position must be a nonzero finite vector"));
    }
    let rhat = position / r;
    let j = Vector3::new(0.0, 0.0, model.angular_momentum());
    Ok((3.0 * j.dot(&rhat) * rhat - j) / (2.0 * r.powi(3)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn default_model_passes_invariants() {
        let m = default_earth();
        assert_eq!(m.surface_gravity, 9.8);
        // centrifugal magnitude omega^2 R ~ 3.4e-2 m/s^2
        let centrifugal = m.spin_rate * m.spin_rate * m.radius;
        assert_relative_eq!(centrifugal, 3.3877615647411e-2, max_relative = 1e-10);
        // 2GM/(c^2 R) ~ 1.39e-9 (frozen from direct evaluation of the constants)
        let rs_over_r = m.schwarzschild_radius() / m.radius;
        assert_relative_eq!(rs_over_r, 1.3921530592791162e-9, max_relative = 1e-12);
    }

    #[test]
    fn rejects_nonpositive_fields() {
        let m = default_earth();
        assert!(EarthModel::new(0.0, m.mass, m.radius, m.moment_of_inertia, m.spin_rate, m.surface_gravity, m.light_speed).is_err());
        assert!(EarthModel::new(m.grav_const, -1.0, m.radius, m.moment_of_inertia, m.spin_rate, m.surface_gravity, m.light_speed).is_err());
        assert!(EarthModel::new(m.grav_const, m.mass, f64::NAN, m.moment_of_inertia, m.spin_rate, m.surface_gravity, m.light_speed).is_err());
    }

    #[test]
    fn rejects_strong_field_and_oversized_inertia() {
        let m = default_earth();
        // a compact object of the same mass: 100 m radius is deep inside r_S/R >= 1e-6
        assert!(EarthModel::new(m.grav_const, m.mass, 100.0, 1e10, m.spin_rate, m.surface_gravity, m.light_speed).is_err());
        let too_big = 0.41 * m.mass * m.radius * m.radius;
        assert!(EarthModel::new(m.grav_const, m.mass, m.radius, too_big, m.spin_rate, m.surface_gravity, m.light_speed).is_err());
    }

    #[test]
    fn potential_at_surface() {
        let m = default_earth();
        let u = newtonian_potential(&m, m.radius).unwrap();
        assert_relative_eq!(u, 6.2560238581070475e7, max_relative = 1e-12);
        assert_relative_eq!(
            newtonian_potential_dimensionless(&m, m.radius).unwrap(),
            6.960765296395581e-10,
            max_relative = 1e-12
        );
    }

    #[test]
    fn potential_scales_as_one_over_r() {
        let m = default_earth();
        let u1 = newtonian_potential(&m, m.radius).unwrap();
        let u2 = newtonian_potential(&m, 2.0 * m.radius).unwrap();
        assert_eq!(u2, u1 / 2.0);
        // U(r) * r constant over [R, 10R]
        for k in 1..=10 {
            let r = m.radius * k as f64;
            let prod = newtonian_potential(&m, r).unwrap() * r;
            assert_relative_eq!(prod, u1 * m.radius, max_relative = 1e-12);
        }
        assert!(newtonian_potential(&m, 0.0).is_err());
        assert!(newtonian_potential(&m, -1.0).is_err());
    }

    #[test]
    fn gravitomagnetic_vanishes_on_axis_and_scales() {
        let m = default_earth();
        let on_axis = gravitomagnetic_potential(&m, &Vector3::new(0.0, 0.0, m.radius)).unwrap();
        assert_abs_diff_eq!(on_axis.norm(), 0.0);

        let eq = Vector3::new(m.radius, 0.0, 0.0);
        let v = gravitomagnetic_potential(&m, &eq).unwrap();
        // |V| = I omega / (2 R^2) at the equator
        assert_relative_eq!(v.norm(), 7.200731445419999e19, max_relative = 1e-10);

        // 1/r^2 scaling of the magnitude off-axis
        let v2 = gravitomagnetic_potential(&m, &(2.0 * eq)).unwrap();
        assert_relative_eq!(v2.norm(), v.norm() / 4.0, max_relative = 1e-12);

        assert!(gravitomagnetic_potential(&m, &Vector3::zeros()).is_err());
    }

    #[test]
    fn gravitomagnetic_is_orthogonal_to_spin_and_position() {
        let m = default_earth();
        let omega_hat = Vector3::new(0.0, 0.0, 1.0);
        for p in [
            Vector3::new(m.radius, 0.0, 0.0),
            Vector3::new(1e6, -2e6, 5e6),
            Vector3::new(-3e5, 4e6, -1e6),
        ] {
            let v = gravitomagnetic_potential(&m, &p).unwrap();
            let scale = v.norm() * p.norm();
            assert!(v.dot(&p).abs() / scale < 1e-12);
            assert!(v.dot(&omega_hat).abs() / v.norm() < 1e-12);
        }
    }
}
