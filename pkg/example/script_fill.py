import warnings

from toricfill import (FamilyRequest, NonFree, Lens, S1xS2, Free,
                       generate_fillings, form_invariants, intersection_form)

# (S1 x S2, xi_t): the plumbings (n, 0, -n)
with warnings.catch_warnings():
    warnings.simplefilter('ignore', UserWarning)
    family = generate_fillings(FamilyRequest(NonFree(S1xS2()), 5), verbosity=1)
for member in family:
    inv = form_invariants(intersection_form(member.graph))
    print(member.index, member.graph, 'z =', member.certificate.z,
          'parity', inv.parity)

# lens space L(5, 2) and two half-Lutz twists of it
for target in (NonFree(Lens(5, 2)), NonFree(Lens(5, 2), 2)):
    family = generate_fillings(FamilyRequest(target, 4))
    print(target.describe(), family.case, target.contact_label)
    for g in family.graphs:
        print('   ', g)

# (T3, xi_2) from cyclic closures
family = generate_fillings(FamilyRequest(Free(2), 3, start=2))
for member in family:
    print(member.graph, member.classification.contact_label)
