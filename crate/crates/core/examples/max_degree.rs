//! Maximal degree of a multiplicity-free divisor monomial, together with
//! a multipath achieving it and the witness element it produces.

use schubert_mf::{
    classify, closed_form_max_degree, max_multipath_total_length, multipath_witness, Result,
    RootSystem,
};

fn main() -> Result<()> {
    for name in ["A3", "A6", "D4", "D7", "E6", "E7", "E8"] {
        let rs = RootSystem::parse(name)?;
        let (best, mp) = max_multipath_total_length(&rs, rs.all_indices())?;
        assert_eq!(best, closed_form_max_degree(rs.kind(), rs.rank())?);
        let paths: Vec<String> = mp
            .paths
            .iter()
            .map(|p| p.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        println!("{name}: {best}  [{}]", paths.join("] ["));

        let (w, n) = multipath_witness(&rs, &mp)?;
        let unit = classify(&rs, &w, &n)?.verdict.is_unit();
        println!("    witness {} with n = {n:?}, unit: {unit}", rs.format_word(&w));
    }
    Ok(())
}
