//! Counts of strong minuscule elements for the exceptional types, computed
//! by filtering each quotient. E8 dominates the running time.

use strongmin::cli::exceptional_count_cells;

fn main() -> strongmin::Result<()> {
    for cell in exceptional_count_cells()? {
        println!(
            "{} i={}  {:>4}  {}",
            cell.label,
            cell.node,
            cell.count,
            if cell.matches { "ok" } else { "MISMATCH" }
        );
    }
    Ok(())
}
