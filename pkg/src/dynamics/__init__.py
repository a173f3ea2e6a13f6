"""
Discrete geodesic flow on triples
"""

from src.dynamics.flow import FlowStep, flow_orbit, psi_h, varphi_h, varphi_h_formula

__all__ = ["varphi_h", "varphi_h_formula", "FlowStep", "psi_h", "flow_orbit"]
