# handlers/inspect_handler.py
from argparse import Namespace

from models.embedding_model import audit_embedding
from models.graph_model import degeneracy_ordering
from services.planar_service import discharge, find_configuration, levels
from utils.codec import load_graph
from utils.errors import PreconditionError, RecolorError
from utils.helpers import failure, status


class InspectHandler:
    def handle(self, action: str, parsed: Namespace) -> dict:
        try:
            if action == 'inspect':
                return self.inspect(parsed)
            return {'success': False, 'action': action, 'message': 'Unknown inspect action',
                    'exit_code': 1}
        except RecolorError as e:
            status(f"❌ {e}")
            return failure(action, e)

    def inspect(self, parsed: Namespace) -> dict:
        """Dump ordering, levels and, with a rotation, faces and the configuration."""
        gf = load_graph(parsed.graph)
        g = gf.graph
        ordering = degeneracy_ordering(g)
        data = {
            'n': g.n,
            'edges': g.edge_count,
            'ordering': list(ordering.order),
            'outdeg': list(ordering.outdeg),
            'd': ordering.d,
            'bipartite': g.is_bipartite(),
        }
        try:
            data['levels'] = levels(g).to_dict()
        except PreconditionError as e:
            data['levels'] = None
            status(f"⚠️ {e}")

        if gf.rotation is not None:
            emb = gf.embedding()
            audit = audit_embedding(emb)
            data['faces'] = emb.to_dict()
            data['euler_audit'] = audit.to_dict()
            if audit.ok and data['bipartite']:
                data['configuration'] = find_configuration(emb).to_dict()
                if data['levels'] is not None:
                    data['discharging'] = discharge(emb).to_dict()
        status(f"📊 n={g.n}, d={ordering.d}")
        return {'success': True, 'action': 'inspect', 'data': data,
                'message': 'Inspection complete', 'exit_code': 0}
