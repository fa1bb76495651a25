# handlers/transform_handler.py
from argparse import Namespace

from models.graph_model import degeneracy_ordering
from models.instance_model import build_instance
from models.sequence_model import validate_sequence
from services.bound_service import BoundParams, bound_recursion, theorem_bound, transform_k_bound
from services.list_recolor_service import transform_k, transform_list
from services.planar_service import PALETTE, transform_planar_bipartite
from utils.codec import GraphFile, load_colouring, load_graph
from utils.errors import InputError, InvariantViolation, RecolorError
from utils.helpers import failure, save_json_file, status


class TransformHandler:
    def handle(self, action: str, parsed: Namespace) -> dict:
        """Run the engine chosen by --mode and self-verify its output."""
        try:
            if action == 'transform':
                return self.transform(parsed)
            return {'success': False, 'action': action, 'message': 'Unknown transform action',
                    'exit_code': 1}
        except RecolorError as e:
            status(f"❌ {e}")
            return failure(action, e)

    def transform(self, parsed: Namespace) -> dict:
        gf = load_graph(parsed.graph)
        g = gf.graph
        if gf.lists is not None and (parsed.colors is not None or parsed.a is not None):
            raise InputError("--colors and --a cannot be combined with explicit lists")

        if parsed.bound_only:
            return self.bound_only(parsed, gf)

        if not parsed.alpha or not parsed.beta:
            raise InputError("transform needs --alpha and --beta colouring files")
        alpha, beta = load_colouring(parsed.alpha), load_colouring(parsed.beta)

        if parsed.mode == 'planar-bipartite':
            inst = build_instance(g, k=len(PALETTE), a=0)
            seq = transform_planar_bipartite(gf.embedding(), alpha, beta)
            engine, bound = 'planar-bipartite', 4 * g.n * g.n
        elif gf.lists is not None:
            inst = build_instance(g, lists=gf.lists)
            seq = transform_list(inst, alpha, beta)
            engine, bound = 'list', bound_recursion(g.n, inst.k, inst.a) if g.n else 0
        else:
            if parsed.colors is None:
                raise InputError("degenerate mode needs --colors K or explicit lists")
            if parsed.a is not None:
                inst = build_instance(g, k=parsed.colors, a=parsed.a)
                seq = transform_list(inst, alpha, beta)
                engine, bound = 'list', bound_recursion(g.n, inst.k, inst.a) if g.n else 0
            else:
                inst = build_instance(g, k=parsed.colors)
                seq = transform_k(g, parsed.colors, alpha, beta, parsed.strategy)
                d = degeneracy_ordering(g).d
                engine = f"k-colouring/{parsed.strategy}"
                bound = transform_k_bound(g.n, parsed.colors, d, parsed.strategy)

        report = validate_sequence(inst, alpha, seq, beta)
        if not report.ok:
            raise InvariantViolation(f"emitted sequence failed verification: {report.reason}")

        summary = {
            'engine': engine,
            'n': g.n,
            'length': seq.total_length,
            'bound': bound,
            'per_vertex_max': seq.max_per_vertex(),
        }
        if parsed.out:
            save_json_file(parsed.out, seq.to_dict(g.n))
            summary['sequence_file'] = parsed.out
        else:
            summary['sequence'] = seq.to_dict(g.n)
        status(f"✅ {engine}: {seq.total_length} steps (bound {bound}, per-vertex max {seq.max_per_vertex()})")
        return {
            'success': True,
            'action': 'transform',
            'data': summary,
            'message': f"Sequence of length {seq.total_length}",
            'exit_code': 0,
        }

    def bound_only(self, parsed: Namespace, gf: GraphFile) -> dict:
        g = gf.graph
        epsilon = parsed.epsilon
        if parsed.mode == 'planar-bipartite':
            data = {'case': 'planar-bipartite', 'value': 4 * g.n * g.n, 'per_vertex': 4 * g.n}
        elif gf.lists is not None:
            inst = build_instance(g, lists=gf.lists)
            data = theorem_bound(BoundParams(g.n, inst.k, a=inst.a, epsilon=epsilon)).to_dict()
        elif parsed.colors is None:
            raise InputError("--bound-only needs --colors K or explicit lists")
        elif parsed.a is not None:
            data = theorem_bound(BoundParams(g.n, parsed.colors, a=parsed.a, epsilon=epsilon)).to_dict()
        else:
            d = degeneracy_ordering(g).d
            data = theorem_bound(BoundParams(g.n, parsed.colors, d=d, epsilon=epsilon)).to_dict()
            data['d'] = d
        data['n'] = g.n
        status(f"📊 bound: {data.get('value')} ({data.get('case')})")
        return {'success': True, 'action': 'transform', 'data': data,
                'message': 'Bound only', 'exit_code': 0}
