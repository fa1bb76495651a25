# handlers/gen_handler.py
from argparse import Namespace

from services.generator_service import GenSpec, gen_colouring, gen_graph, gen_instance
from utils.codec import graph_to_dict
from utils.errors import InputError, RecolorError
from utils.helpers import failure, save_json_file, status


class GenHandler:
    def handle(self, action: str, parsed: Namespace) -> dict:
        try:
            if action == 'gen':
                return self.gen(parsed)
            return {'success': False, 'action': action, 'message': 'Unknown gen action',
                    'exit_code': 1}
        except RecolorError as e:
            status(f"❌ {e}")
            return failure(action, e)

    def gen(self, parsed: Namespace) -> dict:
        spec = GenSpec(
            family=parsed.family, n=parsed.n, d=parsed.d, seed=parsed.seed,
            k=parsed.colors, a=parsed.a, rows=parsed.rows, cols=parsed.cols,
            policy=parsed.policy, subdivisions=parsed.subdivisions, diagonals=parsed.diagonals,
        )
        generated = gen_graph(spec)
        g = generated.graph
        rotation = generated.embedding.rotation if generated.embedding else None

        inst = None
        lists = None
        if spec.k is not None:
            inst = gen_instance(spec, g)
            if spec.policy == 'random':
                lists = inst.lists
        elif parsed.colouring_out:
            raise InputError("colourings need --colors K")

        graph_data = graph_to_dict(g, lists=lists, rotation=rotation)
        data = {'family': spec.family, 'n': g.n, 'edges': g.edge_count}
        if parsed.out:
            save_json_file(parsed.out, graph_data)
            data['graph_file'] = parsed.out
        else:
            data['graph'] = graph_data

        colourings = []
        for i, path in enumerate(parsed.colouring_out or []):
            colour = list(gen_colouring(inst, parsed.colouring_seed + i))
            save_json_file(path, colour)
            colourings.append(path)
        if colourings:
            data['colouring_files'] = colourings

        status(f"✅ generated {spec.family}: n={g.n}, |E|={g.edge_count}")
        return {'success': True, 'action': 'gen', 'data': data,
                'message': f"Generated {spec.family}", 'exit_code': 0}
