# refine complete ignorance about a spin-half particle to the z and to the x
# framework, then show that the two cannot be combined

import numpy as np

from chronos.midware.Logger import Logger
from chronos.qalg.Ket import Ket
from chronos.qalg.Projector import Projector
from chronos.qalg.PropagatorFamily import PropagatorFamily
from chronos.histories.ProductHistory import ProductHistory
from chronos.reasoning.InitialData import InitialData
from chronos.reasoning.Reasoner import Reasoner


if __name__ == "__main__":
    # one time is enough: nothing happens to the particle
    family = PropagatorFamily.identity(2, [0.0])

    zp = Projector.fromKets([Ket.basis(2, 0)])
    xp = Projector.fromKets([Ket(np.array([1.0, 1.0]) / np.sqrt(2.0))])

    # no assumptions at all
    data = InitialData.ignorance(family, 2)

    verdict = Reasoner.query(data, ProductHistory.single(zp, 0.0))
    Logger.info("Pr(Z+) = {}".format(verdict), "example")

    verdict = Reasoner.query(data, ProductHistory.single(xp, 0.0))
    Logger.info("Pr(X+) = {}".format(verdict), "example")

    # both at once: Z+ and X+ do not commute, so there is no framework to ask in
    verdict = Reasoner.query(data, [ProductHistory.single(zp, 0.0),
                                    ProductHistory.single(xp, 0.0)])
    Logger.info("Pr(Z+ and X+) = {}: {}".format(verdict, verdict.getNote()), "example")
