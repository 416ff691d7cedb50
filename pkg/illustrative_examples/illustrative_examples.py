"""
illustrative_examples.py module.

This script walks through the main functionalities of pyNDisc with small
schedules whose results can be checked by hand, and with the parameters of
a BLE-like radio (36 us beacons).
"""

# Block 1: Schedules and duty cycles
from fractions import Fraction

from pyndisc.bounds import (boundMutualExclusive, boundUnidirectional,
                            latencyWithRedundancy, optimizeRedundancy)
from pyndisc.collisions import SimConfig, simulateNetwork
from pyndisc.correlated import (buildCorrelatedQuadruple,
                                oneWayLatencyCorrelated,
                                simulateMutualAssistance,
                                verifyMutualExclusive)
from pyndisc.coverage import (checkDeterministic, checkDisjoint, coverageMap,
                              tickRanges, worstCaseLatency)
from pyndisc.schedule import (BeaconSchedule, ProtocolSpec, RadioOverheads,
                              ReceptionSchedule, dutyCycles, lplDualize)

spec = ProtocolSpec(BeaconSchedule(durations=[1000], gaps=[100000]),
                    ReceptionSchedule(period=200000,
                                      windows=[(0, 10000), (100000, 10000)]),
                    overheads=RadioOverheads(tx=500, rx=2000))
duty = dutyCycles(spec)
print(duty.beta, duty.gamma, duty.eta)  # 3/200 3/25 27/200
dual = lplDualize(spec)
print(dual.beacons, dual.reception.windows)

# Block 2: Coverage maps and determinism
beacons = BeaconSchedule(durations=[0], gaps=[2])
listener = ReceptionSchedule(period=10, windows=[(0, 2)])
covMap = coverageMap(beacons, listener)  # M = ceil(1/gamma) = 5
print(checkDeterministic(covMap)[0], checkDisjoint(covMap))  # True True
ok, uncovered = checkDeterministic(coverageMap(beacons, listener, count=3))
print(ok, tickRanges(uncovered))  # False [(2, 6)]

# Block 3: Worst-case latency sweep against the closed-form bound
sender = BeaconSchedule(durations=[1], gaps=[20])
listener = ReceptionSchedule(period=100, windows=[(0, 20)])
print(worstCaseLatency(sender, listener))  # 101 ticks
print(boundUnidirectional(1, Fraction(1, 20), Fraction(1, 5)).latency)  # 100

# Block 4: Bounds with BLE-like parameters (ticks of 1 us)
report = boundUnidirectional(36, '1/50', '1/50')
print(report.latency, report.seconds())  # 90000 ticks, 0.09 s
print(boundMutualExclusive(36, 1, '1/20').latency)  # 28800
print(latencyWithRedundancy(3, 10000, [293], 36, 0.0207).seconds())  # 0.179

# Block 5: Redundancy under a failure-rate target
plan = optimizeRedundancy(omega=36, alpha=1, eta=0.05, Pf=0.0005, S=3)
print(plan.table[['Q', 'beta', 'count', 'latency', 'feasible']])
print(plan.Q, plan.latency)

# Block 6: Collision simulation
network = ProtocolSpec(BeaconSchedule([20], [1000]),
                       ReceptionSchedule(period=1000, windows=[(0, 1000)]))
for S in (3, 4, 5):
    result = simulateNetwork(SimConfig(network, S=S, trials=100000,
                                       horizon=2000, seed=1, workers=4))
    print(S, result.empiricalCollisionRate, result.analyticPc)

# Block 7: Correlated schedules and mutual assistance
template = ReceptionSchedule(period=8, windows=[(0, 2)])
quad = buildCorrelatedQuadruple(template, zeta=4)
report = verifyMutualExclusive(quad)
print(report.ok, report.omegaF, report.omegaE)  # True [0 1 4 5] [2 3 6 7]
print(oneWayLatencyCorrelated(quad))  # 9
for phi in range(quad.period):
    print(phi, *simulateMutualAssistance(quad, phi))
