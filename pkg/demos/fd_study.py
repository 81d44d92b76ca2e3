"""How fast the finite-difference transport derivative approaches the exact JVP.

Central differences are second order: halving the step should quarter the error.
A fresh flow map is used here; pass a checkpoint path to study a trained one.
"""
import sys

import numpy as np

from meanflow_lab.analysis import fd_order_study, fd_probes
from meanflow_lab.networks import FlowMapNet, NetConfig
from meanflow_lab.pipeline import Checkpoint

if len(sys.argv) > 1:
    net = Checkpoint.load(sys.argv[1]).build_model()
else:
    net = FlowMapNet(NetConfig(dim=16, num_classes=8), seed=0)
    head = net.params["layer3.w"]
    net.params["layer3.w"] = np.random.Generator(np.random.Philox(1)).normal(0, 0.02, head.shape)

rows = fd_order_study(net.apply, net.params, fd_probes(net.config.dim, 32, num_classes=net.config.num_classes),
                      ladder=(0.04, 0.02, 0.01, 0.005, 0.0025, 0.00125))
for r in rows:
    print(f"dt={r['dt']:<8} max rel err={r['max_rel_err']:.3e}  local order={r['local_order']:.3f}")
print(f"fitted order {rows[0]['fitted_order']:.4f}")
