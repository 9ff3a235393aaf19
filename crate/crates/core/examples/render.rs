//! Writes SVG and TikZ arc diagrams into a directory.
//!
//! ```text
//! cargo run --example render -- /tmp/meanders
//! ```

use std::path::PathBuf;

use meander::render::{file_name, render_arc_diagram, RenderFormat, RenderSpec};

fn main() -> meander::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "target/diagrams".into()));
    std::fs::create_dir_all(&dir)?;
    for s in ["1", "1,2,3", "3,2,1,6,5,4", "1,4,3,2"] {
        for format in [RenderFormat::Svg, RenderFormat::Tikz] {
            let spec = RenderSpec::new(s.parse()?).with_format(format);
            let doc = render_arc_diagram(&spec)?;
            let path = dir.join(file_name(&spec, &doc));
            std::fs::write(&path, &doc)?;
            println!("{}", path.display());
        }
    }
    Ok(())
}
