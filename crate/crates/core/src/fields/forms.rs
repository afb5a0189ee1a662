//! Analytic monopole forms.
//!
//! All forms are stored divided by 2π: the curvature `ω = F/2π` has total
//! period `2g` over a sphere around the origin, and a potential `A/2π`
//! integrates directly to a phase measured in turns.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::Point3;
use crate::scalar::Real;

/// Angular tolerance (radians) around a singular ray.
pub const SINGULAR_ANGLE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MonopoleConfig<T> {
    /// Magnetic charge in units with e = ħ = 1.
    pub g: T,
}

impl<T: Real> MonopoleConfig<T> {
    pub fn new(g: T) -> Self {
        Self { g }
    }

    /// 2g, the period of ω; Dirac quantization asks for this to be an integer.
    pub fn normalized_charge(&self) -> T {
        self.g + self.g
    }
}

/// Pole through which a Dirac string leaves the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Pole {
    North,
    South,
}

impl Pole {
    pub fn direction<T: Real>(self) -> Point3<T> {
        match self {
            Pole::North => Point3::new(T::zero(), T::zero(), T::one()),
            Pole::South => Point3::new(T::zero(), T::zero(), -T::one()),
        }
    }

    pub fn opposite(self) -> Self {
        match self {
            Pole::North => Pole::South,
            Pole::South => Pole::North,
        }
    }
}

impl fmt::Display for Pole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pole::North => "north",
            Pole::South => "south",
        })
    }
}

impl std::str::FromStr for Pole {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "north" | "n" => Ok(Pole::North),
            "south" | "s" => Ok(Pole::South),
            other => Err(Error::Argument(format!("unknown pole '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SingularLocus {
    /// The monopole itself.
    Origin,
    /// Half-line from the origin through a pole (a Dirac string).
    Ray(Pole),
    /// The whole z-axis.
    Axis,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Kind<T> {
    Zero,
    /// (g/2π) · solid-angle form
    Curvature { g: T },
    /// South string: (g/2π)(1 − cos θ) dφ; north string: −(g/2π)(1 + cos θ) dφ
    StringPotential { g: T, pole: Pole },
    /// (c/2π) dφ
    Azimuthal { c: T },
}

/// A 1- or 2-form on R³ − {0} given in closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FormField<T> {
    degree: usize,
    kind: Kind<T>,
}

/// ω = F/2π for the monopole of charge `cfg.g`.
pub fn curvature_form<T: Real>(cfg: &MonopoleConfig<T>) -> FormField<T> {
    FormField {
        degree: 2,
        kind: Kind::Curvature { g: cfg.g },
    }
}

/// Singular potential A/2π with its Dirac string through `string_pole`.
pub fn string_potential<T: Real>(cfg: &MonopoleConfig<T>, string_pole: Pole) -> FormField<T> {
    FormField {
        degree: 1,
        kind: Kind::StringPotential {
            g: cfg.g,
            pole: string_pole,
        },
    }
}

impl<T: Real> FormField<T> {
    pub fn zero(degree: usize) -> Result<Self> {
        if !(1..=2).contains(&degree) {
            return Err(Error::Argument(format!("unsupported form degree {degree}")));
        }
        Ok(Self {
            degree,
            kind: Kind::Zero,
        })
    }

    /// (c/2π) dφ, closed away from the z-axis with period c around it.
    pub fn azimuthal(c: T) -> Self {
        Self {
            degree: 1,
            kind: Kind::Azimuthal { c },
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn singular_locus(&self) -> Option<SingularLocus> {
        match self.kind {
            Kind::Zero => None,
            Kind::Curvature { .. } => Some(SingularLocus::Origin),
            Kind::StringPotential { pole, .. } => Some(SingularLocus::Ray(pole)),
            Kind::Azimuthal { .. } => Some(SingularLocus::Axis),
        }
    }

    /// Charge of the monopole curvature, if this is one.
    pub fn monopole_charge(&self) -> Option<T> {
        match self.kind {
            Kind::Curvature { g } => Some(g),
            _ => None,
        }
    }

    pub fn is_zero_form(&self) -> bool {
        matches!(self.kind, Kind::Zero)
    }

    /// Checks whether `p` lies on (or within the angular tolerance of) the
    /// singular locus.
    pub fn check_regular(&self, p: &Point3<T>) -> Result<()> {
        let tol = T::lit(SINGULAR_ANGLE_TOL);
        let r = p.norm();
        if r <= T::epsilon() {
            if self.is_zero_form() {
                return Ok(());
            }
            return Err(Error::Singularity("evaluation at the origin".into()));
        }
        let rho = p.rho();
        let near = |pole: Pole| match pole {
            Pole::North => rho.atan2(p.z) < tol,
            Pole::South => rho.atan2(-p.z) < tol,
        };
        match self.singular_locus() {
            Some(SingularLocus::Ray(pole)) if near(pole) => {
                Err(Error::Singularity(format!("point on the {pole} Dirac string")))
            }
            Some(SingularLocus::Axis) if near(Pole::North) || near(Pole::South) => {
                Err(Error::Singularity("point on the z-axis".into()))
            }
            _ => Ok(()),
        }
    }

    /// Evaluates the form at `p` on `tangents` (one vector for a 1-form, two
    /// for a 2-form).
    pub fn eval(&self, p: &Point3<T>, tangents: &[Point3<T>]) -> Result<T> {
        if tangents.len() != self.degree {
            return Err(Error::Argument(format!(
                "{}-form evaluated on {} tangent vectors",
                self.degree,
                tangents.len()
            )));
        }
        self.check_regular(p)?;
        Ok(self.eval_unchecked(p, tangents))
    }

    /// Evaluation without the singularity check; callers must have
    /// established that `p` is regular.
    pub(crate) fn eval_unchecked(&self, p: &Point3<T>, tangents: &[Point3<T>]) -> T {
        let tau = T::two_pi();
        match self.kind {
            Kind::Zero => T::zero(),
            Kind::Curvature { g } => {
                let r = p.norm();
                g / tau * p.dot(&tangents[0].cross(&tangents[1])) / (r * r * r)
            }
            Kind::StringPotential { g, pole } => {
                let v = &tangents[0];
                let r = p.norm();
                let ang = p.x * v.y - p.y * v.x;
                match pole {
                    // (1 − cos θ)/ρ² = 1/(r (r + z))
                    Pole::South => g / tau * ang / (r * (r + p.z)),
                    Pole::North => -g / tau * ang / (r * (r - p.z)),
                }
            }
            Kind::Azimuthal { c } => {
                let v = &tangents[0];
                let rho2 = p.x * p.x + p.y * p.y;
                c / tau * (p.x * v.y - p.y * v.x) / rho2
            }
        }
    }
}

/// dφ(v) at p: the azimuthal component of a tangent vector.
pub fn dphi<T: Real>(p: &Point3<T>, v: &Point3<T>) -> T {
    (p.x * v.y - p.y * v.x) / (p.x * p.x + p.y * p.y)
}
