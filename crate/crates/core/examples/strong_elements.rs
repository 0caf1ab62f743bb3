//! SM_i for every short node of a type, by the primary route for the type,
//! next to the expected count.
//!
//! cargo run --example strong_elements -- C5

use strongmin::reference::expected_strong_count;
use strongmin::products::enumerate_smi;
use strongmin::weyl::{sort_canonically, WeylGroup};

fn main() -> strongmin::Result<()> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "C5".into()).parse()?;
    let group = WeylGroup::new(label);
    for &i in group.datum().short_nodes() {
        let mut sm = enumerate_smi(&group, i)?;
        sort_canonically(&group, &mut sm);
        let expected = expected_strong_count(label, i).unwrap_or(0);
        println!("SM_{} of {label}: {} elements (expected {expected})", i + 1, sm.len());
        for w in &sm {
            println!("    {}", group.reduced_word(w));
        }
    }
    Ok(())
}
