//! Sweep a whole Weyl group, tally the classification of every element and
//! group the strong ones by their weight.
//!
//! cargo run --example full_sweep -- D5

use std::collections::BTreeMap;

use strongmin::minuscule::classify;
use strongmin::weyl::WeylGroup;

fn main() -> strongmin::Result<()> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "D5".into()).parse()?;
    let group = WeylGroup::new(label);
    let mut tally: BTreeMap<String, usize> = BTreeMap::new();
    for w in group.enumerate_group()? {
        let class = classify(&group, &w);
        let key = match class.strong_weight() {
            Some(l) => format!("Strong {l}"),
            None => class.status().to_string(),
        };
        *tally.entry(key).or_default() += 1;
    }
    println!("|W({label})| = {}", group.order());
    for (k, n) in tally {
        println!("{n:>8}  {k}");
    }
    Ok(())
}
