//! Scratch exploration (deleted before ship).
use liereach_core::*;
use liereach_core::closure::ClosureCaps;
use liereach_core::presets::*;

fn main() {
    // Jacobi on all presets
    for alg in [potential_su11(), scattering_su11(), su2(), heisenberg()] {
        println!("{}: jacobi = {:?}", alg.name(), alg.verify_jacobi().is_ok());
    }

    // pt closure
    let pt = preset("pt").unwrap();
    let alg = pt.system.algebra();
    let mut gens = vec![pt.system.h0().clone()];
    gens.extend(pt.system.controls().iter().cloned());
    let r = lie_closure(alg, &gens, ClosureCaps::new(4, 16)).unwrap();
    println!("pt closure: dim={} sat={} max_order={:?} iters={}", r.dim, r.saturated, r.max_order, r.iterations);
    for b in &r.basis { println!("  {}", b.render(alg.labels())); }

    // st closure at caps 2,3,4
    let st = preset("st").unwrap();
    let alg = st.system.algebra();
    let mut gens = vec![st.system.h0().clone()];
    gens.extend(st.system.controls().iter().cloned());
    for cap in 2..=5 {
        let r = lie_closure(alg, &gens, ClosureCaps::new(cap, 32)).unwrap();
        println!("st closure cap {cap}: dim={} sat={} max_order={:?} iters={}", r.dim, r.saturated, r.max_order, r.iterations);
    }

    // st1 closure + coverage
    let st1 = preset("st1").unwrap();
    let alg = st1.system.algebra();
    let b = lie_closure(alg, st1.system.controls(), ClosureCaps::new(4, 32)).unwrap();
    println!("st1 B-closure cap 4: dim={} sat={}", b.dim, b.saturated);
    let cov = pbw_coverage(alg, &b, 3).unwrap();
    println!("st1 coverage(3): {}/{} missing={}", cov.covered_dim, cov.total, cov.missing.len());

    // env_bracket example: [Lz^2, Lx] scattering
    let e = env_bracket(alg, &EnvElement::monomial(PbwMonomial::from_exps(vec![0,0,2]), GaussianRational::one()), &EnvElement::generator(3, 0)).unwrap();
    println!("[Lz^2, Lx] = {}", e.render(alg.labels()));

    // lloyd closure + coverage
    let lloyd = preset("lloyd").unwrap();
    let alg = lloyd.system.algebra();
    let b = lie_closure(alg, lloyd.system.controls(), ClosureCaps::new(4, 32)).unwrap();
    println!("lloyd B-closure cap 4: dim={} sat={} max_order={:?}", b.dim, b.saturated, b.max_order);
    for row in &b.basis { println!("  {}", row.render(alg.labels())); }
    let cov = pbw_coverage(alg, &b, 3).unwrap();
    println!("lloyd coverage(3): {}/{} missing={:?}", cov.covered_dim, cov.total,
        cov.missing.iter().map(|m| m.render(alg.labels())).collect::<Vec<_>>());

    // without Kerr
    let gens_nokerr: Vec<EnvElement> = lloyd.system.controls()[..3].to_vec();
    let b2 = lie_closure(alg, &gens_nokerr, ClosureCaps::new(4, 32)).unwrap();
    let cov2 = pbw_coverage(alg, &b2, 3).unwrap();
    println!("lloyd-no-kerr coverage(3): {}/{} dim={}", cov2.covered_dim, cov2.total, b2.dim);
}

#[allow(dead_code)]
fn classify_all() {}
