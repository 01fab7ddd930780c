// Decimates a PN-sequence by 2^L1 - 1 and recovers the characteristic
// polynomial of the result two ways: from the cyclotomic coset in
// GF(2^L2) and by Berlekamp-Massey on the decimated bits.
//
// ```text
// cargo run --example decimation
// ```

use std::fmt::Write;

use shrinkca::{
    berlekamp_massey, cyclotomic_coset, decimate_by_stride, minimal_polynomial_of_power, Lfsr,
};

pub fn run() -> shrinkca::Result<String> {
    let p2 = "1+x+x^2+x^4+x^5".parse()?;
    let reg = Lfsr::new(p2, "10000".parse()?)?;
    let period = 31;
    let mut out = String::new();
    for l1 in 1..=4u32 {
        let stride = (1usize << l1) - 1;
        let decimated = decimate_by_stride(&reg.sequence(stride * 2 * period), stride, 0)?;
        let bm = berlekamp_massey(&decimated);
        let algebraic = minimal_polynomial_of_power(reg.charpoly(), stride as u64)?;
        writeln!(
            out,
            "stride {stride:>2}: coset {:?}, algebraic {}, measured {}{}",
            cyclotomic_coset(stride as u64, period as u64),
            algebraic.human(),
            bm.connection_poly.human(),
            if algebraic == bm.connection_poly {
                ""
            } else {
                "  MISMATCH"
            }
        )
        .unwrap();
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    match run() {
        Ok(text) => print!("{text}"),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
