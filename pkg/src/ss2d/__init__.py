"""Soccer Simulation 2D agent framework.

A from-scratch stack for the RoboCup 2D simulation league: a geometry
kernel, the s-expression wire codec, a belief-state world model with
landmark self-localization and ball interception prediction, a
synchronous agent runtime for the player / coach / trainer roles, and
an embedded deterministic match harness for closed-loop testing
without an external server.
"""

__version__ = "0.1.0"
