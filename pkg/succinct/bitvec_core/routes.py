"""Routes for the bitvec_core blueprint."""

from flask import current_app, jsonify, request

from . import bp
from . import utils
from .forms import BitQueryForm, NeighbourQueryForm


def _invalid(form):
    current_app.logger.warning("invalid bitvec query: %s", form.errors)
    return jsonify(error=form.errors), 400


@bp.route("/<any(rank, select):op>")
def count_query(op):
    form = BitQueryForm(formdata=request.args)
    if not form.validate():
        return _invalid(form)
    bits = utils.parse_bits(form.bits.data)
    fn = utils.rank if op == "rank" else utils.select
    return jsonify(result=fn(form.b.data == "1", form.i.data, bits))


@bp.route("/<any(succ, pred):op>")
def neighbour_query(op):
    form = NeighbourQueryForm(formdata=request.args)
    if not form.validate():
        return _invalid(form)
    bits = utils.parse_bits(form.bits.data)
    fn = utils.succ if op == "succ" else utils.pred
    return jsonify(result=fn(form.b.data == "1", bits, form.y.data))
