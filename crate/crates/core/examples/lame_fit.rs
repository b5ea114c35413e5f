//! Fits Lamé curves to points sampled from known curves and compares the
//! closed-form quadrant area with the fitted one.
//!
//! cargo run --example lame_fit

use quas::scoring::{fit_lame, lame_polyline, quadrant_area};

fn main() -> quas::Result<()> {
    for (a, b, p) in [(1.0, 1.0, 2.0), (1.0, 1.0, 1.0), (0.8, 1.2, 4.0), (1.0, 0.9, 0.6)] {
        let points = lame_polyline(a, b, p, 12);
        let fit = fit_lame(&points)?;
        println!(
            "true ({a:.2}, {b:.2}, {p:.2}) area {:.5}  fitted ({:.4}, {:.4}, {:.4}) area {:.5}  residual {:.1e}",
            quadrant_area(a, b, p)?,
            fit.a,
            fit.b,
            fit.p,
            quadrant_area(fit.a, fit.b, fit.p)?,
            fit.residual
        );
    }
    Ok(())
}
