"""Routes for the dynamic_bitvec blueprint."""

from flask import current_app, jsonify

from ..bitvec_core.utils import parse_bits
from ..models import SizeBounds
from . import bp
from .forms import ScriptRunForm
from .script import parse_script, run_script
from .vector import DynamicBitVector


@bp.route("/run", methods=["POST"])
def run():
    form = ScriptRunForm()
    if not form.validate_on_submit():
        current_app.logger.warning("invalid script upload: %s", form.errors)
        return jsonify(error=form.errors), 400
    if form.low.data is not None and form.high.data is not None:
        bounds = SizeBounds(low=form.low.data, high=form.high.data)
    else:
        bounds = SizeBounds.from_config()
    vec = DynamicBitVector(parse_bits(form.initial.data or ""), bounds)
    outputs = run_script(parse_script(form.script.data), vec, verify=form.verify.data)
    return jsonify(outputs=outputs, length=len(vec), dump=vec.dump())
