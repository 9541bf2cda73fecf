from .output import emit_csv, emit_plot_script, write_csv
from .sweep import PRESETS, fig1_spec, fig2_spec, run_sweep
from .validation import validate

__all__ = [
    "PRESETS",
    "emit_csv",
    "emit_plot_script",
    "fig1_spec",
    "fig2_spec",
    "run_sweep",
    "validate",
    "write_csv",
]
