//! Quotient intervals above v_i, and an element of A4 that lies in the
//! ordinary interval but outside the quotient.

use strongmin::bruhat::{bruhat_leq, interval, smi_as_interval, words_json};
use strongmin::minuscule::classify;
use strongmin::products::vi_element;
use strongmin::weyl::{ParabolicContext, WeylGroup};

fn main() -> strongmin::Result<()> {
    let a4 = WeylGroup::new("A4".parse()?);
    let ctx = ParabolicContext::new(a4.datum(), 2)?;
    let v3 = vi_element(&a4, 2)?;
    let top = a4.longest_quotient(&ctx);
    let iv = interval(&a4, &v3, &top, Some(&ctx))?;
    println!("[v_3, w_0^J]^J in A4: {}", serde_json::to_string(&words_json(&a4, &iv)).unwrap());

    let x = a4.mul_gen_left(&v3, 1);
    println!(
        "s_2 v_3 = {}: above v_3 {}, below the top {}, in W^J {}, {}",
        a4.reduced_word(&x),
        bruhat_leq(&a4, &v3, &x),
        bruhat_leq(&a4, &x, &top),
        ctx.is_minimal_representative(&x),
        classify(&a4, &x).status()
    );

    for (label, node) in [("B4", 1), ("C4", 4), ("D5", 1), ("D5", 5), ("E6", 1), ("E7", 6)] {
        let g = WeylGroup::new(label.parse()?);
        let r = smi_as_interval(&g, node - 1)?;
        println!("{}", serde_json::to_string(&r).unwrap());
    }
    Ok(())
}
