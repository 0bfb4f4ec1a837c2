from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from pencil_orbits.pencils import BlockGroupElement, act


class TraceStep(object):

    def __init__(self, label, element):
        # type: (str, BlockGroupElement) -> None
        self.label = label
        self.element = element

    def __repr__(self):
        return 'TraceStep({}, {})'.format(self.label, self.element.matrix.to_text())


class ReductionTrace(object):
    """Group elements applied in order, mapping start to end."""

    def __init__(self, start):
        self.start = start
        self.steps = []
        self.end = start

    def apply(self, label, element):
        # type: (str, BlockGroupElement) -> None
        """Act with element on the current end; identity steps are not recorded."""
        if element.is_identity():
            return
        self.end = act(element, self.end)
        self.steps.append(TraceStep(label, element))

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def replay(self):
        w = self.start
        for step in self.steps:
            w = act(step.element, w)
        return w

    def total(self, group_tag='G_N'):
        """Product g_k ... g_1 of all steps."""
        g = BlockGroupElement.identity(self.start.size, group_tag=group_tag, modulus=self.start.modulus)
        for step in self.steps:
            g = BlockGroupElement(step.element.matrix @ g.matrix, group_tag)
        return g

    def to_records(self):
        return [{'label': step.label, 'element': step.element.matrix.to_text(), 'group': step.element.group_tag}
                for step in self.steps]
