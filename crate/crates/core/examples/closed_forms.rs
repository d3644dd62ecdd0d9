//! Level-1 and level-2 Jack polynomials against their closed forms in
//! theta and eta functions.
//!
//! Run with `cargo run --example closed_forms`.
use affine_jack::jack::{closed_form, jack_normalized, JackLabel};
use affine_jack::qseries::ScaledSeries;

fn main() -> affine_jack::Result<()> {
    let order = 8;
    for (level, ks) in [(1, 1..=4), (2, 1..=3)] {
        for k in ks {
            for label in JackLabel::all(level, k)? {
                let closed = closed_form(label, order)?;
                let j = ScaledSeries::rational(jack_normalized(label, order)?);
                let verdict = match j.first_difference(&closed) {
                    None => "agrees".to_string(),
                    Some(d) => format!("differs: {d:?}"),
                };
                println!("K={level} k={k} l={}: {verdict} through p^{order}", label.l);
            }
        }
    }
    let l = JackLabel::new(1, 2, 3)?;
    println!("\nK=1 k=2 l=3 closed form:\n{}", closed_form(l, 3)?);
    Ok(())
}
