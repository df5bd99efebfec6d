//! Exhaustive checks of the cluster recursion over every A-configuration
//! of `A_3`, not only inversion sets.

use schubert_mf::cluster::simple_reweighting;
use schubert_mf::{
    is_excessively_clusterizable, is_simply_excessively_clusterizable, AConfiguration, Kind, Root,
    RootSystem,
};

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|k| {
            compositions(total - k, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, k);
                rest
            })
        })
        .collect()
}

fn all_configurations(rs: &RootSystem) -> Vec<AConfiguration> {
    let pos = rs.positive_roots();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pos.len()) {
        let roots: Vec<Root> = (0..pos.len())
            .filter(|k| mask & (1 << k) != 0)
            .map(|k| pos[k].clone())
            .collect();
        for n in compositions(roots.len() as u32, rs.rank()) {
            out.push(AConfiguration::new(rs, roots.clone(), n).unwrap());
        }
    }
    out
}

#[test]
fn simple_recursion_implies_general_and_reweighting_exists() {
    let rs = RootSystem::build(Kind::A, 3).unwrap();
    let mut clusterizable = 0;
    for cfg in all_configurations(&rs) {
        let general = is_excessively_clusterizable(&rs, &cfg);
        if is_simply_excessively_clusterizable(&rs, &cfg).is_some() {
            assert!(general.is_some(), "{cfg:?}");
        }
        if general.is_some() {
            clusterizable += 1;
            let (m, trace) = simple_reweighting(&rs, &cfg).unwrap_or_else(|| panic!("{cfg:?}"));
            assert_eq!(m.iter().sum::<u32>() as usize, cfg.len());
            assert!(m
                .iter()
                .zip(cfg.multiplicities())
                .all(|(&mi, &ni)| ni > 0 || mi == 0));
            assert_eq!(trace.layers.iter().map(|l| l.roots.len()).sum::<usize>(), cfg.len());
        }
    }
    assert!(clusterizable > 0);
}

#[test]
fn disjoint_unions_stay_clusterizable() {
    let rs = RootSystem::build(Kind::A, 3).unwrap();
    let good: Vec<AConfiguration> = all_configurations(&rs)
        .into_iter()
        .filter(|c| !c.is_empty() && is_excessively_clusterizable(&rs, c).is_some())
        .collect();
    let mut unions = 0;
    for a in &good {
        let j = a.involved();
        for b in &good {
            let disjoint = a.roots().iter().all(|r| !b.roots().contains(r));
            let avoids = b.roots().iter().all(|r| !r.support().intersects(j));
            let separate = !a.involved().intersects(b.involved());
            if !(disjoint && avoids && separate) {
                continue;
            }
            let roots: Vec<Root> = a.roots().iter().chain(b.roots()).cloned().collect();
            let n: Vec<u32> = a
                .multiplicities()
                .iter()
                .zip(b.multiplicities())
                .map(|(x, y)| x + y)
                .collect();
            let union = AConfiguration::new(&rs, roots, n).unwrap();
            assert!(is_excessively_clusterizable(&rs, &union).is_some(), "{a:?} ∪ {b:?}");
            unions += 1;
        }
    }
    assert!(unions > 0);
}

#[test]
fn traces_partition_the_configuration() {
    let rs = RootSystem::build(Kind::A, 3).unwrap();
    for cfg in all_configurations(&rs) {
        if let Some(trace) = is_excessively_clusterizable(&rs, &cfg) {
            let mut seen: Vec<Root> = trace.layers.iter().flat_map(|l| l.roots.clone()).collect();
            seen.sort();
            assert_eq!(seen, cfg.roots());
            let mut k = vec![0u32; rs.rank()];
            for layer in &trace.layers {
                for (acc, x) in k.iter_mut().zip(&layer.k) {
                    *acc += x;
                }
            }
            assert_eq!(k, cfg.multiplicities());
        }
    }
}
