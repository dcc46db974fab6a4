"""Routes for the louds blueprint."""

from flask import current_app, jsonify, request

from ..bitvec_core.utils import format_bits, parse_bits
from . import bp
from . import utils
from .forms import LoudsQueryForm, TreeBuildForm


@bp.route("/build", methods=["POST"])
def build():
    form = TreeBuildForm()
    if not form.validate_on_submit():
        current_app.logger.warning("invalid tree upload: %s", form.errors)
        return jsonify(error=form.errors), 400
    tree = utils.parse_tree(form.tree.data)
    if form.super_root.data:
        tree = utils.with_super_root(tree)
    bits = utils.louds_encode(tree)
    return jsonify(bits=format_bits(bits), nodes=utils.number_of_nodes(tree))


@bp.route("/query")
def query():
    form = LoudsQueryForm(formdata=request.args)
    if not form.validate():
        current_app.logger.warning("invalid louds query: %s", form.errors)
        return jsonify(error=form.errors), 400
    louds = utils.LoudsTree(parse_bits(form.bits.data))
    if form.op.data == "children":
        result = louds.children(form.pos.data)
    elif form.op.data == "parent":
        result = louds.parent(form.pos.data)
    else:
        if form.index.data is None:
            return jsonify(error={"index": ["child needs an index"]}), 400
        result = louds.child(form.pos.data, form.index.data)
    return jsonify(result=result)
