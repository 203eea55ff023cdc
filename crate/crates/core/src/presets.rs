//! Built-in algebras and control systems.
//!
//! All Hamiltonians are stored skew-Hermitian (`H = -i H'` with `H'` the
//! Hermitian observable, hbar = 1); constants that scale free Hamiltonians
//! default to 1.

use crate::algebra::{AlgebraElement, Involution, StructureAlgebra};
use crate::closure::ClosureCaps;
use crate::env::{EnvElement, PbwMonomial, Rewriter};
use crate::error::{CoreError, Result};
use crate::rep::{CompactAxis, RepSpec};
use crate::scalar::GaussianRational;
use crate::system::ControlSystem;

fn i_times(g: usize) -> AlgebraElement {
    AlgebraElement::term(g, GaussianRational::i())
}

fn neg_i_times(g: usize) -> AlgebraElement {
    AlgebraElement::term(g, -GaussianRational::i())
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// su(1,1) in the potential-algebra convention: `Lz` compact,
/// `[Lx,Ly] = i Lz`, `[Ly,Lz] = -i Lx`, `[Lz,Lx] = -i Ly`.
pub fn potential_su11() -> StructureAlgebra {
    StructureAlgebra::new(
        "potential-su11",
        labels(&["Lx", "Ly", "Lz"]),
        vec![
            ((0, 1), i_times(2)),
            ((1, 2), neg_i_times(0)),
            ((0, 2), i_times(1)), // [Lx,Lz] = -[Lz,Lx] = i Ly
        ],
        vec![Involution::Hermitian; 3],
        vec![false; 3],
        None,
    )
    .expect("preset algebra is valid")
}

/// su(1,1) in the scattering-algebra convention: `Ly` compact,
/// `[Lx,Ly] = -i Lz`, `[Ly,Lz] = -i Lx`, `[Lz,Lx] = i Ly`.
pub fn scattering_su11() -> StructureAlgebra {
    StructureAlgebra::new(
        "scattering-su11",
        labels(&["Lx", "Ly", "Lz"]),
        vec![
            ((0, 1), neg_i_times(2)),
            ((1, 2), neg_i_times(0)),
            ((0, 2), neg_i_times(1)), // [Lx,Lz] = -[Lz,Lx] = -i Ly
        ],
        vec![Involution::Hermitian; 3],
        vec![false; 3],
        None,
    )
    .expect("preset algebra is valid")
}

/// su(2) with the standard cyclic relations `[Lx,Ly] = i Lz` etc.
pub fn su2() -> StructureAlgebra {
    StructureAlgebra::new(
        "su2",
        labels(&["Lx", "Ly", "Lz"]),
        vec![
            ((0, 1), i_times(2)),
            ((1, 2), i_times(0)),
            ((0, 2), neg_i_times(1)), // [Lx,Lz] = -[Lz,Lx] = -i Ly
        ],
        vec![Involution::Hermitian; 3],
        vec![false; 3],
        None,
    )
    .expect("preset algebra is valid")
}

/// The Heisenberg algebra `h(1) = {x, p, I}` with `[x, p] = i I` and the
/// central generator `I` designated as the unit.
pub fn heisenberg() -> StructureAlgebra {
    StructureAlgebra::new(
        "h1",
        labels(&["x", "p", "I"]),
        vec![((0, 1), i_times(2))],
        vec![Involution::Hermitian; 3],
        vec![false, false, true],
        Some(2),
    )
    .expect("preset algebra is valid")
}

fn gen_elem(d: usize, g: usize) -> EnvElement {
    EnvElement::generator(d, g)
}

fn mono(exps: &[u32], c: GaussianRational) -> EnvElement {
    EnvElement::monomial(PbwMonomial::from_exps(exps.to_vec()), c)
}

fn one() -> GaussianRational {
    GaussianRational::one()
}

fn neg_i() -> GaussianRational {
    -GaussianRational::i()
}

/// A preset system with its recommended representation and caps.
#[derive(Clone, Debug)]
pub struct Preset {
    pub system: ControlSystem,
    pub rep: RepSpec,
    pub caps: ClosureCaps,
    pub k_max: u32,
    pub blurb: &'static str,
}

pub const PRESET_NAMES: [&str; 5] = ["pt", "st", "st1", "bt", "lloyd"];

/// Builds a named preset. All systems use a = 1 and hbar = 1, and every
/// Hamiltonian is stored in skew form.
pub fn preset(name: &str) -> Result<Preset> {
    match name {
        "pt" => {
            let alg = potential_su11();
            // Casimir C = Lx^2 + Ly^2 - Lz^2 for this convention.
            let mut h0p = mono(&[2, 0, 0], one());
            h0p.add_assign(&mono(&[0, 2, 0], one()));
            h0p.add_assign(&mono(&[0, 0, 2], -one()));
            h0p.add_assign(&EnvElement::scalar(3, GaussianRational::from_ratio(1, 4)));
            let h0 = h0p.scale(&neg_i());
            let controls = vec![
                gen_elem(3, 0).scale(&neg_i()),
                gen_elem(3, 1).scale(&neg_i()),
            ];
            let system = ControlSystem::new("pt", alg, h0, controls)?;
            Ok(Preset {
                system,
                rep: RepSpec::su11_discrete(CompactAxis::Z, 2, 24)?,
                caps: ClosureCaps::new(4, 16),
                k_max: 4,
                blurb: "Potential-algebra su(1,1) well: H0 = C + 1/4 with controls Lx, Ly; \
                        the closure stays four dimensional.",
            })
        }
        "st" => {
            let alg = scattering_su11();
            let h0 = mono(&[0, 0, 2], one()).scale(&neg_i());
            let controls = vec![
                gen_elem(3, 0).scale(&neg_i()),
                gen_elem(3, 1).scale(&neg_i()),
            ];
            let system = ControlSystem::new("st", alg, h0, controls)?;
            Ok(Preset {
                system,
                rep: RepSpec::su11_discrete(CompactAxis::Y, 2, 24)?,
                caps: ClosureCaps::new(4, 16),
                k_max: 4,
                blurb: "Scattering-algebra su(1,1): H0 = Lz^2 with controls Lx, Ly; the \
                        closure keeps growing with the order cap.",
            })
        }
        "st1" => {
            let alg = scattering_su11();
            let h0 = mono(&[0, 0, 2], one()).scale(&neg_i());
            let controls = vec![
                gen_elem(3, 0).scale(&neg_i()),
                gen_elem(3, 1).scale(&neg_i()),
                mono(&[2, 0, 0], one()).scale(&neg_i()),
            ];
            let system = ControlSystem::new("st1", alg, h0, controls)?;
            Ok(Preset {
                system,
                rep: RepSpec::su11_discrete(CompactAxis::Y, 2, 24)?,
                caps: ClosureCaps::new(4, 16),
                k_max: 4,
                blurb: "Scattering su(1,1) with the extra second-order control Lx^2, which \
                        blows the control closure up to every ordered monomial.",
            })
        }
        "bt" => {
            let alg = su2();
            // Sign note: sources differ on the sign of H0 for this model;
            // this preset uses the bound-state well H0' = -Lz^2.
            let h0 = mono(&[0, 0, 2], -one()).scale(&neg_i());
            let controls = vec![
                gen_elem(3, 0).scale(&neg_i()),
                gen_elem(3, 1).scale(&neg_i()),
            ];
            let system = ControlSystem::new("bt", alg, h0, controls)?;
            Ok(Preset {
                system,
                rep: RepSpec::su2_spin(4)?,
                caps: ClosureCaps::new(4, 16),
                k_max: 4,
                blurb: "Bound-state su(2) well: H0 = -Lz^2 with controls Lx, Ly; compact \
                        symmetry algebra, still a growing closure. Sign note: conventions \
                        differ on the sign of H0; this preset uses the attractive well.",
            })
        }
        "lloyd" => {
            let alg = heisenberg();
            let mut rw = Rewriter::new(&alg);
            let x = gen_elem(3, 0);
            let p = gen_elem(3, 1);
            let mut quad = mono(&[2, 0, 0], one());
            quad.add_assign(&mono(&[0, 2, 0], one()));
            let h0 = quad.scale(&neg_i());
            let squeezer = rw.multiply(&x, &p)?.add(&rw.multiply(&p, &x)?);
            let kerr = rw.multiply(&quad, &quad)?;
            drop(rw);
            let controls = vec![
                squeezer.scale(&neg_i()),
                p.scale(&neg_i()),
                x.scale(&neg_i()),
                kerr.scale(&neg_i()),
            ];
            let system = ControlSystem::new("lloyd", alg, h0, controls)?;
            Ok(Preset {
                system,
                rep: RepSpec::heisenberg_fock(40)?,
                caps: ClosureCaps::new(4, 16),
                k_max: 4,
                blurb: "Continuous-variable oscillator: H0 = p^2 + x^2 with squeezer, \
                        displacement and Kerr controls over h(1); the Kerr term opens up \
                        the full polynomial closure.",
            })
        }
        other => Err(CoreError::Argument(format!(
            "unknown preset '{other}'; available: {}",
            PRESET_NAMES.join(", ")
        ))),
    }
}

/// Spin-1/2 Rabi benchmark: `H0 = -i Lz`, one control `-i Lx`, exact two
/// level representation. The matrices are `-i sigma_z / 2` and
/// `-i sigma_x / 2`.
pub fn spin_half_benchmark() -> Result<(ControlSystem, RepSpec)> {
    let alg = su2();
    let h0 = gen_elem(3, 2).scale(&neg_i());
    let controls = vec![gen_elem(3, 0).scale(&neg_i())];
    let system = ControlSystem::new("spin-half", alg, h0, controls)?;
    Ok((system, RepSpec::su2_spin(1)?))
}

/// Homogeneous spin-1/2 system with controls spanning su(2).
pub fn homogeneous_su2_benchmark() -> Result<(ControlSystem, RepSpec)> {
    let alg = su2();
    let h0 = EnvElement::zero(3);
    let controls = vec![
        gen_elem(3, 0).scale(&neg_i()),
        gen_elem(3, 1).scale(&neg_i()),
    ];
    let system = ControlSystem::new("su2-homogeneous", alg, h0, controls)?;
    Ok((system, RepSpec::su2_spin(1)?))
}

/// Homogeneous spin-1/2 system with a single control, whose closure is the
/// one-dimensional algebra it generates.
pub fn degenerate_su2_benchmark() -> Result<(ControlSystem, RepSpec)> {
    let alg = su2();
    let h0 = EnvElement::zero(3);
    let controls = vec![gen_elem(3, 2).scale(&neg_i())];
    let system = ControlSystem::new("su2-degenerate", alg, h0, controls)?;
    Ok((system, RepSpec::su2_spin(1)?))
}
