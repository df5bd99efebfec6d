//! Decides whether a coefficient equals one by peeling the inversion set
//! into excessive clusters, and cross-checks against the Pieri rule.

use schubert_mf::{classify_checked, Result, RootSystem, Verdict};

fn main() -> Result<()> {
    let rs = RootSystem::parse("A3")?;
    let w = rs.longest();
    for n in [[3u32, 2, 1], [2, 2, 2], [1, 4, 1]] {
        let c = classify_checked(&rs, &w, &n)?;
        match &c.verdict {
            Verdict::Unit => println!("n = {n:?}: coefficient 1"),
            Verdict::NonUnit(v) => println!("n = {n:?}: coefficient {v}"),
        }
        if let Some(trace) = c.trace {
            for layer in trace.layers {
                let idx: Vec<usize> = layer.indices.iter().map(|i| i + 1).collect();
                let roots: Vec<String> = layer.roots.iter().map(|r| r.to_string()).collect();
                println!("  peel I = {idx:?}: {}", roots.join(" "));
            }
        }
    }
    Ok(())
}
