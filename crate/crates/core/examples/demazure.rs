//! Dimensions of Demazure modules E_{bar v_i}(Λ_i) for minuscule Λ_i,
//! counted as the quotient elements below bar(v_i).

use strongmin::bruhat::demazure_report;
use strongmin::weyl::WeylGroup;

fn main() -> strongmin::Result<()> {
    let cases = [
        ("A5", 3),
        ("B4", 1),
        ("C4", 4),
        ("D5", 1),
        ("D5", 2),
        ("D5", 5),
        ("E6", 1),
        ("E6", 5),
        ("E7", 6),
    ];
    for (label, node) in cases {
        let r = demazure_report(&WeylGroup::new(label.parse()?), node - 1)?;
        let expected = r.expected.map_or("-".into(), |e| e.to_string());
        println!("{label} i={node}: dim {:>3}  closed form {expected:>3}", r.dim);
    }
    Ok(())
}
