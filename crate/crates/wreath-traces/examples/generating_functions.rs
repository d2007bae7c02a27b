//! The generating-function route: Euler products with exact big-integer
//! coefficients, and the closed forms t(Γ,x) = Ψ^{C−1},
//! s(Γ,x) = Ψ^{C−1}(·Φ), c(Γ,x) = Ψ^C.
//!
//! ```bash
//! cargo run --example generating_functions
//! ```

use wreath_traces::gamma::{table_for, GammaSpec};
use wreath_traces::series::{
    class_series, colored_generating_function, euler_psi, odd_phi, supertrace_series,
    trace_series, ColorSpec,
};

fn main() {
    let n_max = 12;

    let psi = euler_psi(n_max);
    let phi = odd_phi(n_max);
    println!("Ψ(x)  (partition numbers):        {:?}", psi.coeffs());
    println!("Φ(x)  (odd-part partitions):      {:?}\n", phi.coeffs());

    for spec in [
        GammaSpec::Cyclic(1),
        GammaSpec::Cyclic(2),
        GammaSpec::Cyclic(3),
        GammaSpec::BinaryDihedral(2),
        GammaSpec::BinaryTetrahedral,
    ] {
        let c = table_for(spec).class_count();
        println!("{spec} (C = {c}):");
        println!("  t: {:?}", trace_series(spec, n_max).coeffs());
        println!("  s: {:?}", supertrace_series(spec, n_max).coeffs());
        println!("  c: {:?}", class_series(spec, n_max).coeffs());
    }

    // the same numbers through the colored-weights problem: cycles of
    // length r with n_r admissible marks
    println!("\ncolored-weights route for Z3 (2 colors per even length, 3 per odd):");
    let table = table_for(GammaSpec::Cyclic(3));
    let s_colors = ColorSpec {
        prefix: (1..=n_max as u64)
            .map(|r| table.admissible_counts(r).1)
            .collect(),
        tail: 2,
    };
    let by_colors = colored_generating_function(&s_colors, n_max);
    assert_eq!(by_colors, supertrace_series(GammaSpec::Cyclic(3), n_max));
    println!("  {:?}  == s(Z3, x)", by_colors.coeffs());
}
