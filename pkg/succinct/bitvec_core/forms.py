"""Forms for the bitvec_core blueprint."""

from flask_wtf import FlaskForm
from wtforms import IntegerField, SelectField, StringField
from wtforms.validators import DataRequired, InputRequired, Length, NumberRange, Regexp

import config


class BitQueryForm(FlaskForm):
    """Query string of a rank/select/succ/pred request."""

    class Meta:
        csrf = False

    bits = StringField(
        "bits",
        validators=[
            DataRequired(),
            Length(max=getattr(config, "MAX_QUERY_BITS", 1 << 20)),
            Regexp(r"^[01\s]*$", message="bits must be made of 0 and 1"),
        ],
    )
    b = SelectField("b", choices=[("0", "0"), ("1", "1")], default="1")
    i = IntegerField("i", validators=[InputRequired(), NumberRange(min=0)])


class NeighbourQueryForm(FlaskForm):
    """Query string of a succ/pred request; ``y`` counts from one."""

    class Meta:
        csrf = False

    bits = BitQueryForm.bits
    b = BitQueryForm.b
    y = IntegerField("y", validators=[InputRequired(), NumberRange(min=1)])
