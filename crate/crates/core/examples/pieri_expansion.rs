//! Expands a divisor monomial in the Schubert basis and compares the
//! Pieri coefficient with the sorting count.

use schubert_mf::{coefficient_with, expand_monomial, CoefficientMethod, Result, RootSystem};

fn main() -> Result<()> {
    let rs = RootSystem::parse("A3")?;
    let n = [2, 1, 1];
    let v = expand_monomial(&rs, &n)?;
    println!("D1^2 D2 D3 in A3, degree {}:", v.degree());
    for (w, c) in v.terms() {
        let by_sorting = coefficient_with(&rs, w, &n, CoefficientMethod::SortingCount)?;
        assert_eq!(&by_sorting, c);
        println!("  {c} * Z[{}]", rs.format_word(w));
    }

    // coefficients grow quickly; they stay exact
    let rs = RootSystem::parse("D4")?;
    let top = rs.longest();
    let c = coefficient_with(&rs, &top, &[3, 3, 3, 3], CoefficientMethod::SortingCount)?;
    println!("D4 point class in D1^3 D2^3 D3^3 D4^3: {c}");
    Ok(())
}
