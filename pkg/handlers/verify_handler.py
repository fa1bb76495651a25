# handlers/verify_handler.py
from argparse import Namespace

from models.sequence_model import validate_sequence
from utils.codec import instance_for, load_colouring, load_graph, load_sequence
from utils.errors import InputError, RecolorError
from utils.helpers import failure, status


class VerifyHandler:
    def handle(self, action: str, parsed: Namespace) -> dict:
        try:
            if action == 'verify':
                return self.verify(parsed)
            return {'success': False, 'action': action, 'message': 'Unknown verify action',
                    'exit_code': 1}
        except RecolorError as e:
            status(f"❌ {e}")
            return failure(action, e)

    def verify(self, parsed: Namespace) -> dict:
        """Replay a sequence file; exit 0 only if it is valid and lands on the target."""
        gf = load_graph(parsed.graph)
        start = load_colouring(parsed.start)
        target = load_colouring(parsed.target)
        seq = load_sequence(parsed.sequence)

        colors = parsed.colors
        if gf.lists is None and colors is None:
            # Without lists or --colors, allow every colour that appears anywhere.
            used = list(start) + list(target) + [s.c for s in seq]
            colors = max(used, default=0) + 1
        inst = instance_for(gf, colors, None)
        if len(start) != inst.n or len(target) != inst.n:
            raise InputError(f"start and target must have {inst.n} entries")

        report = validate_sequence(inst, start, seq, target)
        data = report.to_dict()
        if report.ok:
            status(f"✅ valid sequence of length {report.total_length}, target reached")
            return {'success': True, 'action': 'verify', 'data': data,
                    'message': 'Sequence is valid', 'exit_code': 0}
        if report.valid:
            message = 'Sequence is valid but does not reach the target'
        else:
            message = f"Step {report.first_bad_index} is invalid: {report.reason}"
        status(f"❌ {message}")
        return {'success': False, 'action': 'verify', 'data': data,
                'message': message, 'exit_code': 1}
