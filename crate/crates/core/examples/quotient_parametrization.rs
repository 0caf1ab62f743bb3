//! The product parametrization of a maximal parabolic quotient, checked
//! against a direct walk of the quotient.
//!
//! cargo run --example quotient_parametrization -- D5 3

use std::collections::HashSet;

use strongmin::products::enumerate_quotient_products;
use strongmin::weyl::{ParabolicContext, WeylGroup};

fn main() -> strongmin::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let label = args.first().map_or("D5", String::as_str).parse()?;
    let node: usize = args.get(1).map_or(Ok(3), |s| s.parse()).unwrap_or(3);
    let group = WeylGroup::new(label);
    let i = node - 1;

    let param = enumerate_quotient_products(&group, i)?;
    for p in &param {
        println!(
            "{:>3}  {:<28} {}",
            p.element.length(),
            serde_json::to_string(&p.seq).unwrap(),
            p.word
        );
    }

    let ctx = ParabolicContext::new(group.datum(), i)?;
    let walked: HashSet<_> = group.quotient_representatives(&ctx).into_iter().collect();
    let same = param.len() == walked.len() && param.iter().all(|p| walked.contains(&p.element));
    println!("{} products; matches the quotient walk: {same}", param.len());
    Ok(())
}
