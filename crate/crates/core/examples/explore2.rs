//! Scratch: classify all presets (deleted before ship).
use liereach_core::*;
use liereach_core::presets::*;

fn main() {
    for name in PRESET_NAMES {
        let p = preset(name).unwrap();
        let t0 = std::time::Instant::now();
        let v = classify(&p.system, p.caps, p.k_max, Some(&p.rep), 42).unwrap();
        println!(
            "{name}: {:?}  dim_A={} dim_B={:?} dim_C={:?} sat={} growth={:?} bc={:?} tangent={:?} failed={:?}  ({:?})",
            v.classification,
            v.evidence.dim_a,
            v.evidence.dim_b,
            v.evidence.dim_c,
            v.evidence.saturated,
            v.evidence.growth.iter().map(|g| (g.cap, g.dim)).collect::<Vec<_>>(),
            v.evidence.condition_bc.as_ref().map(|b| b.holds),
            v.evidence.tangent.iter().map(|t| (t.rank_c, t.rank_a)).collect::<Vec<_>>(),
            v.evidence.failed_condition,
            t0.elapsed(),
        );
    }
    // Benchmarks
    let (sys, rep) = homogeneous_su2_benchmark().unwrap();
    let v = classify(&sys, ClosureCaps::new(4, 16), 4, Some(&rep), 42).unwrap();
    println!("homogeneous su2: {:?} dim_A={}", v.classification, v.evidence.dim_a);
    let (sys, rep) = degenerate_su2_benchmark().unwrap();
    let v = classify(&sys, ClosureCaps::new(4, 16), 4, Some(&rep), 42).unwrap();
    println!("degenerate su2: {:?} dim_A={} failed={:?}", v.classification, v.evidence.dim_a, v.evidence.failed_condition);
    let (sys, rep) = spin_half_benchmark().unwrap();
    let v = classify(&sys, ClosureCaps::new(4, 16), 4, Some(&rep), 42).unwrap();
    println!("spin-half: {:?} dim_A={}", v.classification, v.evidence.dim_a);
    // NoGo construction
    let p = preset("pt").unwrap();
    let sys = p.system.clone().with_manifold(ManifoldTarget::Sphere);
    let v = classify(&sys, p.caps, p.k_max, Some(&p.rep), 42).unwrap();
    println!("pt-on-sphere: {:?} nogo={}", v.classification, v.evidence.nogo_sphere);
}
