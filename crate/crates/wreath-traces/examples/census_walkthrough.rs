//! Walk through the marked-partition census of Z3 ≀ S_2: list all nine
//! conjugacy classes, their characteristic polynomials, and which of them
//! admit traces and supertraces.
//!
//! ```bash
//! cargo run --example census_walkthrough
//! ```

use wreath_traces::census::{
    census_counts, char_poly, char_poly_eval_signed_one, enumerate_marked_partitions,
    is_s_admissible, is_t_admissible, Sign,
};
use wreath_traces::gamma::{table_for, GammaSpec};

fn main() {
    let spec = GammaSpec::Cyclic(3);
    let n = 2;
    let table = table_for(spec);

    println!("conjugacy classes of {spec} wr S_{n} as marked partitions:\n");
    for mp in enumerate_marked_partitions(&table, n) {
        let factors = char_poly(&mp, &table);
        let (zero_plus, value_plus) = char_poly_eval_signed_one(&factors, Sign::Plus);
        let (zero_minus, value_minus) = char_poly_eval_signed_one(&factors, Sign::Minus);
        println!(
            "  {:<16} t-admissible: {:<5}  s-admissible: {:<5}  P(1) = {:>6.2}  P(-1) = {:>6.2}",
            mp.render(),
            is_t_admissible(&mp, &table),
            is_s_admissible(&mp, &table),
            value_plus,
            value_minus,
        );
        // the numeric values are redundant: admissibility is exactly the
        // nonvanishing of the characteristic polynomial
        assert_eq!(is_t_admissible(&mp, &table), !zero_plus);
        assert_eq!(is_s_admissible(&mp, &table), !zero_minus);
    }

    let counts = census_counts(spec, n).expect("within census bounds");
    println!(
        "\ntotals: C = {}, T = {} traces, S = {} supertraces",
        counts.c, counts.t, counts.s
    );
    println!("(S > T here: Z3 has no -1, so no Klein operator exists)");
}
