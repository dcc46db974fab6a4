"""Forms for the dynamic_bitvec blueprint."""

from flask_wtf import FlaskForm
from wtforms import BooleanField, IntegerField, StringField, TextAreaField
from wtforms.validators import DataRequired, NumberRange, Optional, Regexp


class ScriptRunForm(FlaskForm):
    """Op script plus optional initial contents and leaf bounds."""

    class Meta:
        csrf = False

    script = TextAreaField("script", validators=[DataRequired()])
    initial = StringField(
        "initial",
        validators=[Optional(), Regexp(r"^[01\s]*$", message="bits must be made of 0 and 1")],
    )
    low = IntegerField("low", validators=[Optional(), NumberRange(min=1)])
    high = IntegerField("high", validators=[Optional(), NumberRange(min=2)])
    verify = BooleanField("verify")
