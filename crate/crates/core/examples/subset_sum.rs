//! The subset-sum table behind the coloring step, including the case where
//! two equal values must both be used.
//!
//!     cargo run --example subset_sum

use maxdisp::SubsetSumTable;

fn show(values: &[usize]) {
    let table = SubsetSumTable::new(values);
    println!("values {values:?}");
    for target in 0..=table.total() {
        match table.backtrack(target) {
            Some(path) => {
                let items: Vec<String> = path
                    .iter()
                    .map(|l| format!("item {} (+{})", l.item, l.value))
                    .collect();
                println!(
                    "  {target:>3}: {}",
                    if items.is_empty() {
                        "empty set".into()
                    } else {
                        items.join(", ")
                    }
                );
            }
            None => println!("  {target:>3}: unreachable"),
        }
    }
}

fn main() {
    show(&[2, 2]);
    show(&[1, 3]);
    show(&[3, 1, 1, 2]);
}
