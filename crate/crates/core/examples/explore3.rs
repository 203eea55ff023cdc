//! Scratch: rep layer + dynamics validation (deleted before ship).
use liereach_core::*;
use liereach_core::presets::*;
use liereach_core::rep::*;
use liereach_core::dynamics::*;
use num_complex::Complex64;

fn main() {
    // PBW soundness oracle: random words vs ordered matrix products.
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let cases: Vec<(StructureAlgebra, RepSpec)> = vec![
        (potential_su11(), RepSpec::su11_discrete(CompactAxis::Z, 2, 24).unwrap()),
        (scattering_su11(), RepSpec::su11_discrete(CompactAxis::Y, 2, 24).unwrap()),
        (su2(), RepSpec::su2_spin(4).unwrap()),
        (heisenberg(), RepSpec::heisenberg_fock(40).unwrap()),
    ];
    for (alg, rep) in &cases {
        let mut worst: f64 = 0.0;
        let mut rw = Rewriter::new(alg);
        for _ in 0..200 {
            let len = rng.gen_range(1..=4);
            let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..3)).collect();
            let sym = rw.normal_order(&word).unwrap();
            let m_sym = env_to_matrix(rep, &sym).unwrap();
            let gens = rep.gen_matrices().unwrap();
            let mut prod = CMatrix::identity(rep.dim, rep.dim);
            for &g in &word { prod = prod * &gens[g]; }
            let interior = rep.interior_limit(len as u32);
            let mut num = 0.0f64; let mut den = 0.0f64;
            for c in 0..interior {
                num += (m_sym.column(c) - prod.column(c)).norm_squared();
                den += prod.column(c).norm_squared().max(m_sym.column(c).norm_squared());
            }
            let rel = if den > 0.0 { (num/den).sqrt() } else { num.sqrt() };
            worst = worst.max(rel);
        }
        println!("{}: PBW oracle worst rel dev = {:.3e}", alg.name(), worst);
    }

    // Commutation tables via homomorphism_check
    for (alg, rep) in &cases {
        let r = homomorphism_check(rep, alg, 3, 40, 11, true).unwrap();
        println!("{}: hom check n=3 max_rel={:.3e} pass={}", alg.name(), r.max_rel_dev, r.pass);
    }
    // negative control: tight fock without interior restriction
    let h1 = heisenberg();
    let tiny = RepSpec::heisenberg_fock(6).unwrap();
    let r = homomorphism_check(&tiny, &h1, 3, 40, 11, false).unwrap();
    println!("fock K=6 unrestricted: max_rel={:.3e} pass={}", r.max_rel_dev, r.pass);

    // Casimir: su2 spin j=1: Lx^2+Ly^2+Lz^2 = 2I
    let alg = su2();
    let rep1 = RepSpec::su2_spin(2).unwrap();
    let mut cas = EnvElement::monomial(PbwMonomial::from_exps(vec![2,0,0]), GaussianRational::one());
    cas.add_assign(&EnvElement::monomial(PbwMonomial::from_exps(vec![0,2,0]), GaussianRational::one()));
    cas.add_assign(&EnvElement::monomial(PbwMonomial::from_exps(vec![0,0,2]), GaussianRational::one()));
    let m = env_to_matrix(&rep1, &cas).unwrap();
    println!("su2 j=1 casimir diag: {:?}", (0..3).map(|k| m[(k,k)].re).collect::<Vec<_>>());
    // [C, gen] = 0 symbolically for all three algebras
    for alg in [potential_su11(), scattering_su11(), su2()] {
        let (cx, cy, cz) = match alg.name() {
            "potential-su11" => (1i64, 1, -1),
            "scattering-su11" => (1, -1, 1),
            _ => (1, 1, 1),
        };
        let mut cas = EnvElement::monomial(PbwMonomial::from_exps(vec![2,0,0]), GaussianRational::from_int(cx));
        cas.add_assign(&EnvElement::monomial(PbwMonomial::from_exps(vec![0,2,0]), GaussianRational::from_int(cy)));
        cas.add_assign(&EnvElement::monomial(PbwMonomial::from_exps(vec![0,0,2]), GaussianRational::from_int(cz)));
        let ok = (0..3).all(|g| env_bracket(&alg, &cas, &EnvElement::generator(3, g)).unwrap().is_zero());
        println!("{}: casimir central = {ok}", alg.name());
    }

    // Nelson delta: su2 spin j=1 -> 3I; fock diag 2n+2
    let delta = nelson_delta(&rep1, &su2()).unwrap();
    println!("su2 j=1 nelson diag: {:?}", (0..3).map(|k| delta[(k,k)].re).collect::<Vec<_>>());
    let fock = RepSpec::heisenberg_fock(12).unwrap();
    let delta = nelson_delta(&fock, &heisenberg()).unwrap();
    println!("fock nelson diag[0..6]: {:?}", (0..6).map(|k| delta[(k,k)].re).collect::<Vec<_>>());

    // Appendix-B style identity over potential skew basis: [Lx^2, Lx^{n-2}Ly] = 2 Lx^{n-1} Lz + lower
    let alg = potential_su11();
    let mut rw = Rewriter::new(&alg);
    let neg_i = -GaussianRational::i();
    let lx = EnvElement::generator(3, 0).scale(&neg_i);
    let ly = EnvElement::generator(3, 1).scale(&neg_i);
    let lz = EnvElement::generator(3, 2).scale(&neg_i);
    for n in [3u32, 4] {
        let lx2 = rw.multiply(&lx, &lx).unwrap();
        // B = Lx^{n-2} Ly
        let mut b = ly.clone();
        for _ in 0..n - 2 {
            b = rw.multiply(&lx, &b).unwrap();
        }
        let bracket = rw.bracket(&lx2, &b).unwrap();
        // lead = 2 * Lx^{n-1} Lz
        let mut lead = lz.clone();
        for _ in 0..n-1 { lead = rw.multiply(&lx, &lead).unwrap(); }
        let lead = lead.scale(&GaussianRational::from_int(2));
        let q = bracket.sub(&lead);
        println!("n={n}: bracket order {:?}, remainder order {:?} (want <= {})", bracket.order(), q.order(), n-1);
    }

    // Rabi closed form: H0=-i sz/2, H1=-i sx/2, u=pi, T=1
    let (sys, rep) = spin_half_benchmark().unwrap();
    let sched = ControlSchedule::new(vec![ScheduleSegment { duration: 1.0, amplitudes: vec![std::f64::consts::PI] }]).unwrap();
    let psi0 = basis_state(2, 0);
    let out = propagate(&sys, &rep, &sched, &psi0).unwrap();
    let theta = (1.0f64 + std::f64::consts::PI.powi(2)).sqrt();
    let (nx, nz) = (std::f64::consts::PI / theta, 1.0 / theta);
    // U = cos(theta/2) I - i sin(theta/2) (nx sx + nz sz)
    let c = (theta/2.0).cos(); let s = (theta/2.0).sin();
    let expect0 = Complex64::new(c, -s*nz);
    let expect1 = Complex64::new(0.0, -s*nx);
    println!("rabi: got ({:.12}, {:.12}) want ({:.12}, {:.12})", out[0], out[1], expect0, expect1);

    // Trotter rates
    let probes = probe_states(2, 42);
    let i = Complex64::new(0.0, 1.0);
    let sx = CMatrix::from_row_slice(2,2,&[0.0.into(), 1.0.into(), 1.0.into(), 0.0.into()]);
    let sz = CMatrix::from_row_slice(2,2,&[1.0.into(), 0.0.into(), 0.0.into(), Complex64::new(-1.0,0.0)]);
    let x = &sx * (-i); let y = &sz * (-i);
    let mut pts = vec![];
    for k in [64u32, 128, 256, 512, 1024] {
        let e = trotter_sum_error(&x, &y, 1.0, k, &probes).unwrap();
        pts.push((k as f64, e));
    }
    println!("trotter sum errors: {:?}", pts);
    println!("loglog slope: {:.4}", fitted_loglog_slope(&pts));
    let xs = &sx * (-i*Complex64::new(0.5,0.0)); let ys = CMatrix::from_row_slice(2,2,&[0.0.into(), Complex64::new(0.0,-1.0), Complex64::new(0.0,1.0), 0.0.into()]) * (-i*Complex64::new(0.5,0.0));
    let mut prev = f64::INFINITY; let mut first = 0.0; let mut last = 0.0;
    for (idx, k) in [4u32,16,64,256].iter().enumerate() {
        let e = trotter_commutator_error(&xs, &ys, 1.0, *k, &probes).unwrap();
        if idx == 0 { first = e; }
        last = e;
        println!("commutator n={k}: err={e:.6e} (monotone: {})", e < prev);
        prev = e;
    }
    println!("err(256) < err(4)/3: {}", last < first / 3.0);

    // Attainability: spin-1 benchmark
    let j1 = RepSpec::su2_spin(2).unwrap();
    let szm = env_to_matrix(&j1, &EnvElement::monomial(PbwMonomial::from_exps(vec![0,0,2]), GaussianRational::one())).unwrap();
    let sxm = env_to_matrix(&j1, &EnvElement::generator(3, 0)).unwrap();
    let h0m = szm * (-i); let xm = sxm * (-i);
    let psi0 = basis_state(3, 0);
    let eps = [1e-1, 1e-2, 1e-3, 1e-4];
    let res = attainability_experiment(&h0m, &xm, 1.0, &eps, &psi0, 200).unwrap();
    for p in &res.grid { println!("eps={:.0e} dev={:.6e} bound={:.6e} ok={}", p.parameter, p.error, p.bound.unwrap(), p.error <= p.bound.unwrap()); }
    let slopes: Vec<f64> = res.grid.iter().map(|p| p.error/p.parameter).collect();
    let spread = slopes.iter().cloned().fold(f64::NEG_INFINITY, f64::max) / slopes.iter().cloned().fold(f64::INFINITY, f64::min) - 1.0;
    println!("slope spread: {:.3}%", spread*100.0);

    // Reach probe on spin-half
    let (sys, rep) = spin_half_benchmark().unwrap();
    let mut rng2 = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let t0 = std::time::Instant::now();
    let mut min_fid = 1.0f64;
    for tcount in 0..20 {
        let target = random_interior_state(2, 2, &mut rng2);
        let out = reach_probe(&sys, &rep, &basis_state(2,0), &target, ReachBudget { segments: 3, restarts: 50, refine_sweeps: 60 }, 42 + tcount).unwrap();
        min_fid = min_fid.min(out.best_fidelity);
    }
    println!("reach: min fidelity over 20 targets = {:.6} in {:?}", min_fid, t0.elapsed());
}
