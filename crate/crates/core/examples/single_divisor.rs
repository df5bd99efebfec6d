//! Powers of one divisor: the path-originating sequence behind each unit
//! coefficient and the largest multiplicity-free power.

use schubert_mf::{
    max_single_divisor_power, single_divisor_classify, Result, RootSystem, DEFAULT_MAX_ELEMENTS,
};

fn main() -> Result<()> {
    let rs = RootSystem::parse("E6")?;
    for i in 0..rs.rank() {
        println!("D{}: largest multiplicity-free power {}", i + 1, max_single_divisor_power(&rs, i)?);
    }

    // every length-3 element reached from D2^3 in A4 with coefficient 1
    let rs = RootSystem::parse("A4")?;
    for w in rs.enumerate_group(DEFAULT_MAX_ELEMENTS)? {
        if w.length() != 3 {
            continue;
        }
        if let Some(seq) = single_divisor_classify(&rs, &w, 1)? {
            let path: Vec<usize> = seq.path().iter().map(|i| i + 1).collect();
            println!("Z[{}] once in D2^3, path {path:?}", rs.format_word(&w));
        }
    }
    Ok(())
}
