//! Classify elements given as words.
//!
//! cargo run --example classify -- B3 3,2,1 1,2 ""

use strongmin::minuscule::{classify_word, solve_word};
use strongmin::weyl::{parse_word, WeylGroup};

fn main() -> strongmin::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (label, words) = match args.split_first() {
        Some((l, w)) if !w.is_empty() => (l.clone(), w.to_vec()),
        _ => ("A4".to_string(), vec!["4,1,2,3".into(), "2,1,2,4,3".into(), "1,2".into(), "".into()]),
    };
    let group = WeylGroup::new(label.parse()?);
    for text in &words {
        let word = parse_word(text)?;
        let class = classify_word(&group, &word)?;
        let sol = solve_word(group.datum(), &word);
        print!("{label} [{text}]: {}", class.status());
        if let Some(l) = class.strong_weight() {
            print!(" with Λ_w = {l}");
        } else if sol.consistent {
            print!(" (forced part {}, free nodes {:?})", sol.forced, sol.free_nodes);
        }
        println!();
    }
    Ok(())
}
